import sys
import time

from partitions import color_counts, is_multi_regular, derive
from regions import LegTriple, series_floor
from series import vars_q, monomial, constant, macmahon, embed, invert_unit
from dt_vertex import dt_vertex
from pt_vertex import pt_vertex_enum
from weights import recurrence_K, require_nonempty, RECURRENCE_PAIRS
from errors import RecurrenceViolated


def v_empty(n,D):
    """
    The vacuum product M(1,q)^n * prod_{0<a<=b<n} M(q_a...q_b,q) * M((q_a...q_b)^-1,q), with q = q_0...q_{n-1}.

    Args:
        n (int): The colour modulus
        D (int): Truncation order

    Returns:
        V (LaurentSeries)
    """

    variables = vars_q(n)
    q = monomial( variables , [1]*n )
    one = constant( variables , 1 )

    V = constant( variables , 1 , D )
    for _ in range(n): V = V * macmahon(one,q,D)
    for a in range( 1 , n ):
        for b in range( a , n ):
            run = [ 1 if a <= l <= b else 0 for l in range(n) ]
            V = V * macmahon( monomial(variables,run) , q , D ) * macmahon( monomial( variables , [ -e for e in run ] ) , q , D )
    return V.truncate(D)

def vacuum_check(n,D):
    """
    Compare the vacuum product against the enumerated V^n_{(),(),()}.

    Returns:
        report (dict): {'n', 'degree', 'holds', 'witness'}
    """

    witness = v_empty(n,D).first_mismatch( dt_vertex( n , ( () , () , () ) , D ) , D )
    return { 'n': n , 'degree': D , 'holds': witness is None , 'witness': witness }

def color_shift(f,n,k):
    """
    Substitute q_l -> q_{l+k} (indices mod n) in f.
    """

    variables = vars_q(n)
    return embed( f , variables , { variables[l]: variables[ (l+k) % n ] for l in range(n) } )

def _shifted_vacuum(n,k,D):
    # V_{()()()}(q_k, q_{k+1}, ..., q_{k+n-1})
    return color_shift( v_empty(n,D) , n , k )

def O_nu(nu,n,D):
    """
    prod_k V_{()()()}(q_k,...,q_{k+n-1})^(-2|nu|_k + |nu|_{k+1} + |nu|_{k-1}); equal to 1 for multi-regular nu and for n = 1.

    Args:
        nu (tuple[int]): The third leg
        n (int): The colour modulus
        D (int): Truncation order

    Returns:
        O (LaurentSeries)
    """

    counts = color_counts(nu,n)
    O = constant( vars_q(n) , 1 , D )
    for k in range(n):
        power = int( -2*counts[k] + counts[ (k+1) % n ] + counts[ (k-1) % n ] )
        if power == 0: continue
        shifted = _shifted_vacuum(n,k,D)
        factor = shifted if power > 0 else invert_unit(shifted,D)
        for _ in range( abs(power) ): O = ( O * factor ).truncate(D)
    return O

##################################################################################################################################################################################################################

def recurrence_legs(which,legs):
    """
    The six leg triples of a condensation recurrence, keyed by role: 'base', 'rc-rc', 'rc-', '-rc', 'r-c', 'c-r'.
    """

    _ , ( a , b ) = RECURRENCE_PAIRS[which]
    def modify(first,second):
        triple = list( legs[:3] )
        if first: triple[a] = derive( triple[a] , first )
        if second: triple[b] = derive( triple[b] , second )
        return LegTriple( *triple , legs.n )

    return { 'base': modify(None,None) , 'rc-rc': modify('rc','rc') , 'rc-': modify('rc',None) , '-rc': modify(None,'rc') ,
             'r-c': modify('r','c') , 'c-r': modify('c','r') }

# colour shifts of the (r,c) and (c,r) vertices: removing the two corners of recurrences 2 and 3 moves the origin
# off the colour-0 diagonal
RECURRENCE_TWISTS = { 1: ( 0 , 0 ) , 2: ( -1 , 1 ) , 3: ( -1 , 1 ) }

def _product(compute,first,second,shift,D,twists=(0,0)):
    # each factor is needed to D - shift - floor(other factor) for the product to be exact to D
    f = color_shift( compute( first , D - shift - series_floor(second) ) , first.n , twists[0] )
    g = color_shift( compute( second , D - shift - series_floor(first) ) , second.n , twists[1] )
    return f * g

def recurrence_check(which,side,legs,n,D,jobs=1,verbose=False):
    """
    Check the condensation recurrence
        Y(lam,mu,nu) * Y(rc,rc) = Y(rc,.) * Y(.,rc) + q^K * s^-1(Y(r,c)) * s(Y(c,r))
    to total degree D, with Y = V on the DT side and Y = W on the PT side. s^k substitutes q_l -> q_{l+k}; it is the
    identity for the first recurrence, where this is the normalized form Y = V/V_{()()()} cross-multiplied by
    V_{()()()}^2, which cancels. For the second and third recurrences the vacuum does not cancel against its shifts,
    so the unnormalized vertices are the ones compared. K is taken from recurrence_K.

    Args:
        which (int): 1 modifies (lam,mu), 2 modifies (lam,nu), 3 modifies (mu,nu)
        side (str): 'DT' or 'PT'
        legs (tuple): (lam, mu, nu)
        n (int): The colour modulus
        D (int): Truncation order
        jobs (int): Worker processes for the PT enumeration
        verbose (bool): Print progress to stderr

    Returns:
        report (dict): {'which', 'side', 'legs', 'n', 'degree', 'holds'}

    Raises:
        EmptyPartition: When a partition the recurrence modifies is empty
        RecurrenceViolated: With the first differing coefficient
    """

    legs = LegTriple( *legs[:3] , n )
    require_nonempty(legs,which)
    triples = recurrence_legs(which,legs)
    K = [ int(e) for e in recurrence_K(which,legs,n) ]

    if side == 'DT': compute = lambda triple,degree: dt_vertex(n,triple,degree)
    else: compute = lambda triple,degree: pt_vertex_enum(n,triple,degree,jobs)

    start_time = time.time()
    left = _product( compute , triples['base'] , triples['rc-rc'] , 0 , D )
    right = _product( compute , triples['rc-'] , triples['-rc'] , 0 , D ) \
          + monomial( vars_q(n) , K ) * _product( compute , triples['r-c'] , triples['c-r'] , sum(K) , D , RECURRENCE_TWISTS[which] )
    if verbose: print( f'recurrence {which} ({side}) at {[ list(eta) for eta in legs[:3] ]}\t{round( time.time() - start_time , 2 )} seconds' , file=sys.stderr )

    shown = [ list(eta) for eta in legs[:3] ]
    witness = left.first_mismatch(right,D)
    if witness is not None:
        raise RecurrenceViolated( f'recurrence {which} fails on the {side} side' , { 'which': which , 'side': side , 'legs': shown , 'n': n , 'K': K , **witness } )
    return { 'which': which , 'side': side , 'legs': shown , 'n': n , 'degree': D , 'holds': True }

##################################################################################################################################################################################################################

def correspondence_check(legs,n,D,jobs=1,verbose=False):
    """
    Compare V^n_{lam,mu,nu} with V^n_{()()()} * W^n_{lam,mu,nu} to total degree D. For a single nu-leg the O_nu-corrected
    identity V = O_nu * V_{()()()} * W is checked as well.

    Args:
        legs (tuple): (lam, mu, nu)
        n (int): The colour modulus
        D (int): Truncation order
        jobs (int): Worker processes for the PT enumeration
        verbose (bool): Print progress to stderr

    Returns:
        report (dict): {'legs', 'n', 'degree', 'multi_regular', 'holds', 'witness'} and, for a single nu-leg,
        {'corrected_holds', 'corrected_witness'}
    """

    legs = LegTriple( *legs[:3] , n )
    floor = series_floor(legs)

    start_time = time.time()
    V = dt_vertex(n,legs,D)
    vacuum = dt_vertex( n , ( () , () , () ) , D - floor )
    W = pt_vertex_enum(n,legs,D,jobs,verbose)
    if verbose: print( f'V, V_empty and W computed\t{round( time.time() - start_time , 2 )} seconds' , file=sys.stderr )

    witness = V.first_mismatch( vacuum * W , D )
    report = { 'legs': [ list(eta) for eta in legs[:3] ] , 'n': n , 'degree': D , 'multi_regular': is_multi_regular(legs.nu,n) ,
               'holds': witness is None , 'witness': witness }

    if legs.lam == () and legs.mu == () and legs.nu != ():
        corrected = V.first_mismatch( O_nu( legs.nu , n , D - floor ) * vacuum * W , D )
        report['corrected_holds'] = corrected is None
        report['corrected_witness'] = corrected

    return report
