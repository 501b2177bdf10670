import os
import time
import sys
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from partitions import conjugate, is_multi_regular, A_stat, partitions_up_to
from regions import LegTriple, region_sets, enumerate_ab_all, box_color_counts
from series import LaurentSeries, vars_q, monomial, invert_unit, bar_involution
from dt_vertex import dt_vertex
from double_dimer import ab_membership
from symmetric_functions import skew_schur_spec, hook_series_H
from errors import OutOfValidity


def default_jobs():
    return int( os.environ.get( 'ORBIFOLD_VERTEX_JOBS' , os.cpu_count() or 1 ) )

def _member_exponents(args):
    legs , A , B , base = args
    if not ab_membership(legs,A,B): return None
    return tuple( int(e) for e in base + box_color_counts(A,legs.n) + box_color_counts(B,legs.n) )

def pt_vertex_enum(n,legs,D,jobs=1,verbose=False):
    """
    The PT Z_n-vertex as the AB-configuration sum: every (A,B) passing the double-dimer membership test contributes
    prod_l q_l^(|A|_l + |B|_l - |II|_l - 2|III|_l).

    Args:
        n (int): The colour modulus
        legs (tuple): (lam, mu, nu)
        D (int): Truncation order
        jobs (int): Worker processes for the membership tests
        verbose (bool): Print progress to stderr

    Returns:
        W (LaurentSeries)
    """

    legs = LegTriple( *legs[:3] , n )
    regions = region_sets(legs)
    base = -regions.ii_counts - 2*regions.iii_counts
    floor = int( base.sum() )

    start_time = time.time()
    candidates = [ ( legs , A , B , base ) for A,B in enumerate_ab_all( legs , D - floor ) ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor: found = list( executor.map( _member_exponents , candidates , chunksize=8 ) )
    else:
        found = [ _member_exponents(args) for args in candidates ]

    terms = {}
    for exps in found:
        if exps is not None: terms[exps] = terms.get(exps,0) + 1

    if verbose: print( f'{len(candidates)} closed pairs, {sum( terms.values() )} AB configurations\t{round( time.time() - start_time , 2 )} seconds' , file=sys.stderr )
    return LaurentSeries( vars_q(n) , terms , D , floor )

##################################################################################################################################################################################################################

def closed_formula_valid(n,legs):
    lam , mu , nu = legs[:3]
    return is_multi_regular(nu,n) or ( lam == () and mu == () ) or nu == ()

def _contained(eta,xi):
    return len(eta) <= len(xi) and all( eta[i] <= xi[i] for i in range( len(eta) ) )

def pt_vertex_closed(n,legs,D,force=False):
    """
    The closed formula
        q^{-A_lam} * bar(q^{-A_mu'}) * H_nu * sum_{eta in lam' & mu} q_0^{-|eta|} * bar(s_{lam'/eta}(q_{.-nu'})) * s_{mu/eta}(q_{.-nu}).

    Args:
        n (int): The colour modulus
        legs (tuple): (lam, mu, nu)
        D (int): Truncation order
        force (bool): Evaluate even outside the validity domain (nu multi-regular, lam = mu = () or nu = ())

    Returns:
        W (LaurentSeries)
    """

    lam , mu , nu = legs[:3]
    if not force and not closed_formula_valid(n,legs):
        raise OutOfValidity( 'the closed formula needs nu multi-regular, lam = mu = () or nu = ()' , { 'n': n , 'legs': [ list(lam) , list(mu) , list(nu) ] } )

    variables = vars_q(n)
    lam_t , mu_t , nu_t = conjugate(lam) , conjugate(mu) , conjugate(nu)

    prefactor = monomial( variables , [ -A_stat(lam,k,n) for k in range(n) ] ) * bar_involution( monomial( variables , [ -A_stat(mu_t,k,n) for k in range(n) ] ) , n )
    shift = prefactor.floor # the sum is needed to D - deg(prefactor)

    eta_sum = LaurentSeries( variables , {} , D - shift , 0 )
    for eta in partitions_up_to( min( sum(lam) , sum(mu) ) ):
        if not ( _contained(eta,lam_t) and _contained(eta,mu) ): continue
        q0 = np.zeros( n , dtype=np.int64 )
        q0[0] = -sum(eta)
        # the lowest letter of the alphabet q_{.-nu} has degree -nu_1
        lowest_lam = -( sum(lam_t) - sum(eta) ) * ( nu_t[0] if nu_t else 0 )
        lowest_mu = -( sum(mu) - sum(eta) ) * ( nu[0] if nu else 0 )
        target = D - shift + sum(eta)
        term = monomial( variables , q0 ) * bar_involution( skew_schur_spec( lam_t , eta , nu_t , n , target - lowest_mu ) , n ) \
                                          * skew_schur_spec( mu , eta , nu , n , target - lowest_lam )
        eta_sum = eta_sum + term.truncate( D - shift )

    return ( prefactor * hook_series_H( nu , n , D - shift - min( eta_sum.floor , 0 ) ) * eta_sum ).truncate(D)

def pt_vertex_dt_ratio(n,legs,D,force=False):
    """
    V^n_{lam,mu,nu} / V^n_{(),(),()}, which equals the PT vertex when nu is multi-regular.
    """

    legs = LegTriple( *legs[:3] , n )
    if not force and not is_multi_regular(legs.nu,n):
        raise OutOfValidity( 'the DT ratio is the PT vertex only for multi-regular nu' , { 'n': n , 'legs': [ list(eta) for eta in legs[:3] ] } )

    V = dt_vertex(n,legs,D)
    vacuum = dt_vertex( n , ( () , () , () ) , D - V.floor )
    return ( V * invert_unit( vacuum , D - V.floor ) ).truncate(D)

def pt_symmetry_check(n,legs,D):
    """
    Check W^n_{lam,mu,nu} = bar(W^n_{mu',lam',nu'}) on the enumerated series.
    """

    legs = LegTriple( *legs[:3] , n )
    return pt_vertex_enum(n,legs,D).agrees_with( bar_involution( pt_vertex_enum( n , legs.transposed() , D ) , n ) , D )

def triangulate(n,legs,D,jobs=1,verbose=False):
    """
    Compute the PT vertex by enumeration and, where valid, by the closed formula and the DT ratio, and compare them.

    Args:
        n (int): The colour modulus
        legs (tuple): (lam, mu, nu)
        D (int): Truncation order
        jobs (int): Worker processes for the enumeration
        verbose (bool): Print progress to stderr

    Returns:
        report (dict): 'series' maps each method to its LaurentSeries, 'mismatches' maps each disagreeing pair of
        methods to the first differing coefficient
    """

    legs = LegTriple( *legs[:3] , n )
    series = { 'enum': pt_vertex_enum(n,legs,D,jobs,verbose) }
    if closed_formula_valid(n,legs): series['closed'] = pt_vertex_closed(n,legs,D)
    if is_multi_regular(legs.nu,n): series['dt-ratio'] = pt_vertex_dt_ratio(n,legs,D)

    methods = list(series)
    mismatches = {}
    for a in range( len(methods) ):
        for b in range( a + 1 , len(methods) ):
            witness = series[ methods[a] ].first_mismatch( series[ methods[b] ] , D )
            if witness is not None: mismatches[ f'{methods[a]}/{methods[b]}' ] = witness

    return { 'series': series , 'mismatches': mismatches }
