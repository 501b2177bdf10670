from typing import NamedTuple

import numpy as np

from partitions import part, conjugate, derive, diag_stats, partitions_up_to
from series import vars_q, monomial
from errors import EmptyPartition, LemmaViolated


def _zero(n):
    return np.zeros( n , dtype=np.int64 )

def _unit(n,index,power=1):
    exps = _zero(n)
    exps[ index % n ] += power
    return exps

def _run(n,indices,power=1):
    exps = _zero(n)
    for index in indices: exps[ index % n ] += power
    return exps

def bar(exps):
    """
    The bar involution q_k <-> q_{-k} on an exponent vector.
    """

    n = len(exps)
    return exps[ [ (-k) % n for k in range(n) ] ]

def as_monomial(exps):
    return monomial( vars_q( len(exps) ) , [ int(e) for e in exps ] )

##################################################################################################################################################################################################################
# DT minimal-weight factors

def varpi1(m,l,k,n):
    exps = _zero(n)
    for i in range( 0 , m + 1 ):
        for j in range( 0 , m - l + 1 ): exps[ (j-i+k) % n ] += m - i
    return exps

def varpi2(eta,m,k,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ):
        for j in range( 0 , m + 1 ): exps[ (j-i+k) % n ] += part(eta,i)
    return exps

def varpi3(eta,m,k,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ):
        for j in range( 0 , part(eta,i) ): exps[ (j-i+k) % n ] += -m + i
    return exps

def varpi4(eta,m,k,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ):
        eta_i = part(eta,i)
        for j in range( 1 , ( i - k if i <= eta_i else eta_i ) + 1 ): exps[ (m-i+j+k-1) % n ] += m + eta_i - i + k - 1
    return exps

def varpi5(eta,m,k,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ):
        eta_i = part(eta,i)
        for j in range( 1 , ( i - k if i <= eta_i else eta_i ) + 1 ): exps[ (i-j-k-m+1) % n ] += eta_i - j
    return exps

def _varpi67_range(eta,i):
    eta_i = part(eta,i)
    if 2 <= i <= eta_i + 1: return range( 1 , i - 1 )
    if i > eta_i + 1: return range( 1 , eta_i + 1 )
    return range(0)

def varpi6(eta,m,n):
    exps = _unit( n , m , -( m + part(eta,1) ) )
    for i in range( 1 , len(eta) + 1 ):
        for j in _varpi67_range(eta,i): exps[ (m+j+1-i) % n ] += m + 1 + part(eta,i) - i
    return exps

def varpi7(eta,m,n):
    exps = _unit( n , -m , -part(eta,1) )
    for i in range( 1 , len(eta) + 1 ):
        for j in _varpi67_range(eta,i): exps[ (i-j-m-1) % n ] += part(eta,i) - j
    return exps

##################################################################################################################################################################################################################
# PT base-weight factors

def vartheta1(eta,m,k,l,n):
    exps = _zero(n)
    for i in range( 1 , m - len(eta) - l + 1 ):
        for j in range( 1 , i + 1 ): exps[ (-m+i-j+1) % n ] += i + k
    return exps

def vartheta2(eta,m,k,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ):
        eta_i = part(eta,i)
        for j in range( 1 , ( m - eta_i if i <= eta_i else m - i ) + 1 ): exps[ (-i-j+k+1) % n ] += m + eta_i - i - k
    return exps

def vartheta3(eta,m,k,l,n):
    exps = _zero(n)
    for i in range( 1 , m - len(eta) ):
        for j in range( len(eta) + 1 , m - i + 1 ): exps[ (i+j-l) % n ] += m + i - k
    return exps

def vartheta4(eta,m,k,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ):
        eta_i = part(eta,i)
        for j in range( 1 , ( m - eta_i - k if i <= eta_i else m - i - k ) + 1 ): exps[ (i+j+k-1) % n ] += m + eta_i + j + k - 1
    return exps

def vartheta5(eta,m,k,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ):
        eta_i = part(eta,i)
        for j in range( 1 , ( m - eta_i - 1 if i <= eta_i + 1 else m - i ) + 1 ): exps[ (-i-j+k+1) % n ] += m + eta_i - i - k + 1
    return exps

def vartheta6(eta,m,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ):
        eta_i = part(eta,i)
        for j in range( 1 , ( m - eta_i - 1 if i <= eta_i + 1 else m - i ) + 1 ): exps[ (i+j-1) % n ] += m + eta_i + j
    return exps

def vartheta7(eta,m,k,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ):
        eta_i = part(eta,i)
        for j in range( 1 , ( m - eta_i + k if i < eta_i - 1 else m - i + k - 1 ) + 1 ): exps[ (-i-j+k) % n ] += m + eta_i - i - 1
    return exps

def vartheta8(eta,m,k,l,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ):
        eta_i = part(eta,i)
        for j in range( 1 , ( m - eta_i if i < eta_i - k else m - i - 1 ) + 1 ): exps[ (i+j+k-l-1) % n ] += m + eta_i + j - 2*l - 1
    return exps

VARPI = { 1: varpi1 , 2: varpi2 , 3: varpi3 , 4: varpi4 , 5: varpi5 , 6: varpi6 , 7: varpi7 }
VARTHETA = { 1: vartheta1 , 2: vartheta2 , 3: vartheta3 , 4: vartheta4 , 5: vartheta5 , 6: vartheta6 , 7: vartheta7 , 8: vartheta8 }

def varpi(which,args,n):
    return as_monomial( VARPI[which]( *args , n ) )

def vartheta(which,args,n):
    return as_monomial( VARTHETA[which]( *args , n ) )

##################################################################################################################################################################################################################

def require_nonempty(legs,which):
    names = { 1: ( 0 , 1 ) , 2: ( 0 , 2 ) , 3: ( 1 , 2 ) }[which]
    for index in names:
        if len( legs[index] ) == 0: raise EmptyPartition( f'K_{which} needs {("lam","mu","nu")[index]} to be non-empty' , { 'which': which , 'legs': [ list(eta) for eta in legs[:3] ] } )

def K_exponents(which,legs,n):
    """
    Exponent vector of q^{K_which(lam,mu,nu)}, the monomial carried by the second term of the condensation recurrence.

    Args:
        which (int): 1, 2 or 3
        legs (tuple): (lam, mu, nu); K_1 needs lam, mu non-empty, K_2 lam, nu and K_3 mu, nu
        n (int): The colour modulus

    Returns:
        exps (numpy.ndarray)
    """

    require_nonempty(legs,which)
    lam , mu , nu = legs[:3]
    lam_t = conjugate(lam)
    exps = _zero(n)

    if which == 1:
        d_l , dt_l = diag_stats(lam_t)
        d_m , dt_m = diag_stats(mu)
        exps[ (-dt_l) % n ] += d_l
        exps[ dt_m % n ] += d_m
        exps -= _run( n , range( -dt_l , dt_m + 1 ) )
        for i in range( dt_l + 1 , len(lam_t) + 1 ): exps += part(lam_t,i) * ( _unit(n,-i) - _unit(n,-i+1) )
        for i in range( dt_m + 1 , len(mu) + 1 ): exps += part(mu,i) * ( _unit(n,i) - _unit(n,i-1) )

    elif which == 2:
        d_l , _ = diag_stats(lam_t)
        d_n , _ = diag_stats(nu)
        exps[ (1-d_l) % n ] -= part(lam_t,d_l)
        exps += _run( n , range( -d_l + 1 , 0 ) )
        for i in range( 1 , d_l ): exps += part(lam_t,i) * ( _unit(n,-i) - _unit(n,-i+1) )
        for i in range( 1 , len(mu) + 1 ): exps += part(mu,i) * ( _unit(n,i) - _unit(n,i-1) )
        exps -= _run( n , range( 1 , part(nu,d_n) - d_n + 1 ) )

    else:
        d_m , _ = diag_stats(mu)
        d_n , dt_n = diag_stats(nu)
        exps[ (d_m-1) % n ] -= part(mu,d_m)
        exps += _run( n , range( 1 , d_m ) )
        for i in range( 1 , d_m ): exps += part(mu,i) * ( _unit(n,i) - _unit(n,i-1) )
        for i in range( 1 , len(lam_t) + 1 ): exps += part(lam_t,i) * ( _unit(n,-i) - _unit(n,-i+1) )
        exps -= _run( n , ( -i for i in range( 1 , dt_n - d_n + 1 ) ) )

    return exps

def K_monomial(which,legs,n):
    return as_monomial( K_exponents(which,legs,n) )

def recurrence_K(which,legs,n):
    """
    Exponent vector of the monomial in the condensation recurrence for legs in the cylinder convention of regions,
    where a cell (a,b) of a leg has a as its row. K_exponents reads every leg transposed, so it is evaluated on the
    conjugates.
    """

    lam , mu , nu = legs[:3]
    return K_exponents( which , ( conjugate(lam) , conjugate(mu) , conjugate(nu) ) , n )

def K_symmetry_check(legs,n):
    """
    Check q^{K_2(lam,mu,nu)} = bar(q^{K_3(mu',lam',nu')}).
    """

    lam , mu , nu = legs[:3]
    return bool( np.array_equal( K_exponents(2,legs,n) , bar( K_exponents( 3 , ( conjugate(mu) , conjugate(lam) , conjugate(nu) ) , n ) ) ) )

##################################################################################################################################################################################################################
# Composite weights of the configurations entering the three condensation recurrences, as functions of (lam', mu, nu)

def _r(eta): return derive(eta,'r')
def _c(eta): return derive(eta,'c')
def _rc(eta): return derive(eta,'rc') if len(eta) > 0 else ()

def dt_min_weight(lt,mu,nu,N,n):
    return varpi1(N-1,0,0,n) + varpi2(lt,N-1,1,n) + bar( varpi2(mu,N-1,1,n) ) + varpi3(nu,N,1,n) + varpi4(lt,N,1,n) + varpi5(mu,N,1,n)

DT_WEIGHTS = {
    'U':  lambda lt,mu,nu,N,n: varpi1(N,0,0,n) + varpi2(_c(lt),N,1,n) + bar( varpi2(_c(mu),N,1,n) ) + varpi3(nu,N+1,1,n) + varpi6(_c(lt),N,n) + varpi7(_c(mu),N,n),
    'D':  lambda lt,mu,nu,N,n: varpi1(N-2,0,0,n) + varpi2(_r(lt),N-2,1,n) + bar( varpi2(_r(mu),N-2,1,n) ) + varpi3(nu,N-1,1,n) + varpi4(_r(lt),N,0,n) + varpi5(_r(mu),N,0,n),
    'LU': lambda lt,mu,nu,N,n: varpi1(N,1,1,n) + varpi2(_c(lt),N-1,2,n) + bar( varpi2(mu,N,0,n) ) + varpi3(_c(nu),N+1,2,n) + varpi6(_c(lt),N,n) + varpi5(mu,N,1,n),
    'RD': lambda lt,mu,nu,N,n: varpi1(N-2,-1,-1,n) + varpi2(_r(lt),N-1,0,n) + bar( varpi2(mu,N-2,2,n) ) + varpi3(_r(nu),N-1,0,n) + varpi4(_r(lt),N,0,n) + varpi5(mu,N,1,n),
    'LD': lambda lt,mu,nu,N,n: varpi1(N-1,1,1,n) + varpi2(lt,N-2,2,n) + bar( varpi2(_r(mu),N-1,0,n) ) + varpi3(_c(nu),N,2,n) + varpi4(lt,N,1,n) + varpi5(_r(mu),N,0,n),
    'RU': lambda lt,mu,nu,N,n: varpi1(N-1,-1,-1,n) + varpi2(lt,N,0,n) + bar( varpi2(_c(mu),N-1,2,n) ) + varpi3(_r(nu),N,0,n) + varpi4(lt,N,1,n) + varpi7(_c(mu),N,n),
}

def pt_base_weight(lt,mu,nu,N,n):
    return vartheta1(lt,N,0,1,n) + vartheta2(lt,N,0,n) + vartheta3(mu,N,1,1,n) + vartheta4(mu,N,0,n) - varpi3(nu,N,1,n) + varpi1(N-1,0,0,n)

PT_WEIGHTS = {
    'U':  lambda lt,mu,nu,N,n: vartheta1(_c(lt),N,1,1,n) + vartheta5(_c(lt),N,0,n) + vartheta3(_c(mu),N,0,1,n) + vartheta6(_c(mu),N,n) - varpi3(nu,N+1,1,n) + varpi1(N,0,0,n) - _unit(n,N,N),
    'D':  lambda lt,mu,nu,N,n: vartheta1(_r(lt),N,-1,1,n) + vartheta7(_r(lt),N,1,n) + vartheta3(_r(mu),N,2,1,n) + vartheta8(_r(mu),N+1,1,1,n) - varpi3(nu,N-1,1,n) + varpi1(N-2,0,0,n),
    'LU': lambda lt,mu,nu,N,n: vartheta1(_c(lt),N,0,0,n) + vartheta5(_c(lt),N+1,1,n) + vartheta3(mu,N-1,-1,0,n) + vartheta4(mu,N,1,n) - varpi3(_c(nu),N+1,2,n) + varpi1(N,1,1,n) - _unit(n,N,N),
    'RD': lambda lt,mu,nu,N,n: vartheta1(_r(lt),N,0,2,n) + vartheta7(_r(lt),N,0,n) + vartheta3(mu,N+1,3,2,n) + vartheta4(mu,N,-1,n) - varpi3(_r(nu),N-1,0,n) + varpi1(N-2,-1,-1,n),
    'LD': lambda lt,mu,nu,N,n: vartheta1(lt,N,-1,0,n) + vartheta2(lt,N+1,1,n) + vartheta3(_r(mu),N-1,0,0,n) + vartheta8(_r(mu),N,1,0,n) - varpi3(_c(nu),N,2,n) + varpi1(N-1,1,1,n),
    'RU': lambda lt,mu,nu,N,n: vartheta1(lt,N,1,2,n) + vartheta2(lt,N-1,-1,n) + vartheta3(_c(mu),N+1,2,2,n) + vartheta8(_c(mu),N,-1,0,n) - varpi3(_r(nu),N,0,n) + varpi1(N-1,-1,-1,n),
}

# recurrence -> (pair of modified configurations, legs whose rc replaces them in the second base weight)
RECURRENCE_PAIRS = { 1: ( ( 'U' , 'D' ) , ( 0 , 1 ) ) , 2: ( ( 'LU' , 'RD' ) , ( 0 , 2 ) ) , 3: ( ( 'LD' , 'RU' ) , ( 1 , 2 ) ) }

def _rc_legs(lt,mu,nu,indices):
    legs = [ lt , mu , nu ]
    for index in indices: legs[index] = _rc( legs[index] )
    return legs

def _composite_quotient(side,which,legs,N,n):
    lam , mu , nu = legs[:3]
    lt = conjugate(lam)
    base , weights = ( dt_min_weight , DT_WEIGHTS ) if side == 'DT' else ( pt_base_weight , PT_WEIGHTS )
    ( first , second ) , indices = RECURRENCE_PAIRS[which]
    return weights[first](lt,mu,nu,N,n) + weights[second](lt,mu,nu,N,n) - base(lt,mu,nu,N,n) - base( *_rc_legs(lt,mu,nu,indices) , N , n )

def _unit_quotient(side,which,legs,N,n):
    lam , mu , nu = legs[:3]
    lt = conjugate(lam)
    base = dt_min_weight if side == 'DT' else pt_base_weight
    _ , ( a , b ) = RECURRENCE_PAIRS[which]
    return base( *_rc_legs(lt,mu,nu,(a,)) , N , n ) + base( *_rc_legs(lt,mu,nu,(b,)) , N , n ) - base(lt,mu,nu,N,n) - base( *_rc_legs(lt,mu,nu,(a,b)) , N , n )

##################################################################################################################################################################################################################
# The quotient identities, one closed form per lemma

def _dt1_varpi2_rhs(eta,N,n):
    d , dt = diag_stats(eta)
    exps = _unit( n , -dt , d - 1 )
    for i in range( dt + 1 , len(eta) + 1 ): exps += part(eta,i) * ( _unit(n,-i) - _unit(n,-i+1) )
    for i in range( 1 , dt + 1 ): exps[ (N-i+1) % n ] += part(eta,i) - 1
    exps -= _run( n , ( i - dt + 1 for i in range(N) ) )
    for i in range( 1 , d ): exps[ (N-i) % n ] -= part(eta,i) + 1
    exps -= d * _run( n , range( N - dt + 1 , N - d + 1 ) )
    return exps

def _dt1_varpi64_rhs(eta,N,n):
    d , _ = diag_stats(eta)
    exps = _unit( n , N , -N )
    for i in range( 1 , d ): exps[ (N-i) % n ] += part(eta,i) - i
    for i in range( 1 , d + 1 ): exps[ (N-i+1) % n ] -= part(eta,i) - i
    return exps

def _dt1_varpi75_rhs(eta,N,n):
    d , _ = diag_stats(eta)
    exps = _zero(n)
    for i in range( 1 , d ): exps[ (i-N) % n ] += part(eta,i)
    for i in range( 1 , d + 1 ): exps[ (i-N-1) % n ] -= part(eta,i) - 1
    return exps

def _dt2_varpi2_rhs(eta,N,n):
    d , _ = diag_stats(eta)
    exps = _unit( n , 1 - d , -part(eta,d) )
    for i in range( 1 , d ): exps += part(eta,i) * ( _unit(n,-i) - _unit(n,-i+1) ) + _unit(n,-i) - _unit( n , N - i , part(eta,i) )
    for i in range( 1 , d + 1 ): exps[ (N-i+1) % n ] += part(eta,i) - 1
    return exps - _run( n , range( 1 , N ) )

def _shift_rhs(eta,sign,n):
    exps = _zero(n)
    for i in range( 1 , len(eta) + 1 ): exps += part(eta,i) * ( _unit(n,sign*i) - _unit(n,sign*(i-1)) )
    return exps

def _case(eta):
    d , _ = diag_stats(eta)
    if d > 1: return 'd>1'
    return 'd=1,eta1>1' if eta[0] > 1 else 'd=1,eta1=1'

def _pt1_vartheta1_rhs(eta,N,n):
    L = len(eta)
    case = _case(eta)
    if case == 'd>1': return _unit( n , -L , N - L - 1 ) - _run( n , range( 1 - N , -L ) )
    if case == 'd=1,eta1>1': return -_run( n , range( 1 - N , -L + 1 ) ) - sum( ( _unit( n , i , N + i ) for i in range( 1 - L , 0 ) ) , _zero(n) )
    return ( N - 1 ) * _run( n , range( 1 - N , -L + 1 ) ) - sum( ( _unit( n , i , i ) for i in range( 1 - L , 0 ) ) , _zero(n) )

def _pt1_vartheta572_rhs(eta,N,n):
    L = len(eta)
    d , dt = diag_stats(eta)
    case = _case(eta)
    if case == 'd>1':
        exps = _unit( n , -dt , -d ) + _unit( n , -L , L - N ) - _run( n , ( -i for i in range( dt + 1 , L ) ) )
        return exps + sum( ( part(eta,i) * ( _unit(n,-i+1) - _unit(n,-i) ) for i in range( dt + 1 , L + 1 ) ) , _zero(n) )
    if case == 'd=1,eta1>1': return sum( ( _unit( n , -i , N - i ) for i in range( 1 , L ) ) , _zero(n) )
    return -sum( ( _unit( n , -i , i ) for i in range( 1 , L ) ) , _zero(n) ) - N * _run( n , ( -i for i in range( L , N ) ) )

def _pt1_vartheta3_rhs(eta,N,n):
    L = len(eta)
    case = _case(eta)
    if case == 'd>1': return _unit( n , L , N - 1 ) - _run( n , range( L + 1 , N ) )
    if case == 'd=1,eta1>1': return -_run( n , range( L , N ) ) - N * _run( n , range( 1 , L ) )
    return sum( ( _unit( n , i , i ) for i in range( 1 , L ) ) , _zero(n) ) + sum( ( _unit( n , i , N + i - 1 ) for i in range( L , N ) ) , _zero(n) )

def _pt1_vartheta684_rhs(eta,N,n):
    L = len(eta)
    d , dt = diag_stats(eta)
    case = _case(eta)
    if case == 'd>1':
        exps = _unit( n , dt , N ) - _unit( n , L , N ) + _run( n , range( d , dt ) ) - _unit( n , dt , N + d - 1 ) - _run( n , range( dt , L ) )
        return exps + sum( ( part(eta,i) * ( _unit(n,i-1) - _unit(n,i) ) for i in range( dt + 1 , L + 1 ) ) , _zero(n) )
    if case == 'd=1,eta1>1': return N * _run( n , range( 1 , L ) )
    return -sum( ( _unit( n , i , i ) for i in range( 1 , L ) ) , _zero(n) ) - sum( ( _unit( n , i , N + i ) for i in range( L , N ) ) , _zero(n) )

def _pt2_vartheta1_rhs(eta,N,n):
    if _case(eta) != 'd=1,eta1=1': return _zero(n)
    return N * _run( n , ( -i for i in range(N) ) )

def _pt2_vartheta572_rhs(eta,N,n):
    d , _ = diag_stats(eta)
    case = _case(eta)
    if case == 'd>1':
        exps = _unit( n , 0 , N - 1 ) + _unit( n , 1 - d , part(eta,d) ) - _run( n , ( -i for i in range( 1 , d ) ) )
        return exps + sum( ( part(eta,i) * ( _unit(n,-i+1) - _unit(n,-i) ) for i in range( 1 , d ) ) , _zero(n) )
    if case == 'd=1,eta1>1': return _unit( n , 0 , N + eta[0] - 1 )
    return -N * _run( n , ( -i for i in range( 1 , N ) ) )

def _pt2_vartheta4_shift_rhs(eta,N,n):
    if len(eta) == 0: return _zero(n)
    L = len(eta)
    return _unit( n , 0 , N - 1 ) - _unit( n , L , N ) - _run( n , range( 1 , L ) ) - _shift_rhs(eta,1,n)

def _pt3_vartheta2_shift_rhs(eta,N,n):
    if len(eta) == 0: return _zero(n)
    L = len(eta)
    return _unit( n , 0 , N - 1 ) + _unit( n , -L , L - N ) - _run( n , ( -i for i in range( 1 , L ) ) ) - _shift_rhs(eta,-1,n)

def _pt3_vartheta3_rhs(eta,N,n):
    if _case(eta) != 'd=1,eta1=1': return _zero(n)
    return _unit( n , N - 1 , 2*N - 1 ) + sum( ( _unit( n , i , N + i ) for i in range( N - 1 ) ) , _zero(n) )

def _pt3_vartheta84_rhs(eta,N,n):
    d , _ = diag_stats(eta)
    case = _case(eta)
    if case == 'd>1':
        exps = _unit( n , 0 , N - 1 ) + _unit( n , d - 1 , part(eta,d) ) - _run( n , range( 1 , d ) )
        return exps + sum( ( part(eta,i) * ( _unit(n,i-1) - _unit(n,i) ) for i in range( 1 , d ) ) , _zero(n) )
    if case == 'd=1,eta1>1': return _unit( n , 0 , N + eta[0] - 1 )
    return -sum( ( _unit( n , i , N + i ) for i in range( 1 , N ) ) , _zero(n) )

def _linear(*pieces):
    """
    Sum of coefficient * evaluator(eta,N,n) pieces, where each piece is (coefficient, transform of eta, evaluator).
    """

    def lhs(eta,N,n):
        total = _zero(n)
        for coeff,transform,evaluate in pieces: total += coeff * evaluate( transform(eta) , N , n )
        return total
    return lhs

_same = lambda eta: eta


class WeightLemma(NamedTuple):
    name: str
    nonempty: bool   # the lemma needs eta non-empty
    lhs: object      # (eta, N, n) -> exponent vector of the quotient
    rhs: object      # (eta, N, n) -> exponent vector of the closed form


SUBLEMMAS = { lemma.name: lemma for lemma in [
    WeightLemma( 'dt1-varpi1' , False , _linear( ( 1 , _same , lambda e,N,n: varpi1(N,0,0,n) ) , ( 1 , _same , lambda e,N,n: varpi1(N-2,0,0,n) ) , ( -2 , _same , lambda e,N,n: varpi1(N-1,0,0,n) ) ) ,
                 lambda eta,N,n: _unit(n,N,N) + _run( n , range( 1 - N , N ) ) ),
    WeightLemma( 'dt1-varpi2' , True , _linear( ( 1 , _c , lambda e,N,n: varpi2(e,N,1,n) ) , ( 1 , _r , lambda e,N,n: varpi2(e,N-2,1,n) ) ,
                                                ( -1 , _same , lambda e,N,n: varpi2(e,N-1,1,n) ) , ( -1 , _rc , lambda e,N,n: varpi2(e,N-1,1,n) ) ) , _dt1_varpi2_rhs ),
    WeightLemma( 'dt1-varpi3' , False , _linear( ( 1 , _same , lambda e,N,n: varpi3(e,N+1,1,n) ) , ( 1 , _same , lambda e,N,n: varpi3(e,N-1,1,n) ) , ( -2 , _same , lambda e,N,n: varpi3(e,N,1,n) ) ) ,
                 lambda eta,N,n: _zero(n) ),
    WeightLemma( 'dt1-varpi6-varpi4' , True , _linear( ( 1 , _c , lambda e,N,n: varpi6(e,N,n) ) , ( 1 , _r , lambda e,N,n: varpi4(e,N,0,n) ) ,
                                                       ( -1 , _same , lambda e,N,n: varpi4(e,N,1,n) ) , ( -1 , _rc , lambda e,N,n: varpi4(e,N,1,n) ) ) , _dt1_varpi64_rhs ),
    WeightLemma( 'dt1-varpi7-varpi5' , True , _linear( ( 1 , _c , lambda e,N,n: varpi7(e,N,n) ) , ( 1 , _r , lambda e,N,n: varpi5(e,N,0,n) ) ,
                                                       ( -1 , _same , lambda e,N,n: varpi5(e,N,1,n) ) , ( -1 , _rc , lambda e,N,n: varpi5(e,N,1,n) ) ) , _dt1_varpi75_rhs ),
    WeightLemma( 'dt2-varpi1' , False , _linear( ( 1 , _same , lambda e,N,n: varpi1(N,1,1,n) ) , ( 1 , _same , lambda e,N,n: varpi1(N-2,-1,-1,n) ) , ( -2 , _same , lambda e,N,n: varpi1(N-1,0,0,n) ) ) ,
                 lambda eta,N,n: _unit(n,0,1-N) + _unit(n,N,N) + _run( n , range( 1 , N ) ) ),
    WeightLemma( 'dt2-varpi2' , True , _linear( ( 1 , _c , lambda e,N,n: varpi2(e,N-1,2,n) ) , ( 1 , _r , lambda e,N,n: varpi2(e,N-1,0,n) ) ,
                                                ( -1 , _same , lambda e,N,n: varpi2(e,N-1,1,n) ) , ( -1 , _rc , lambda e,N,n: varpi2(e,N-1,1,n) ) ) , _dt2_varpi2_rhs ),
    WeightLemma( 'dt2-varpi2-shift' , False , _linear( ( 1 , _same , lambda e,N,n: varpi2(e,N,0,n) ) , ( 1 , _same , lambda e,N,n: varpi2(e,N-2,2,n) ) , ( -2 , _same , lambda e,N,n: varpi2(e,N-1,1,n) ) ) ,
                 lambda eta,N,n: -_shift_rhs(eta,-1,n) ),
    WeightLemma( 'dt2-varpi3' , True , _linear( ( 1 , _c , lambda e,N,n: varpi3(e,N+1,2,n) ) , ( 1 , _r , lambda e,N,n: varpi3(e,N-1,0,n) ) ,
                                                ( -1 , _same , lambda e,N,n: varpi3(e,N,1,n) ) , ( -1 , _rc , lambda e,N,n: varpi3(e,N,1,n) ) ) ,
                 lambda eta,N,n: _unit(n,0,N-1) - _run( n , range( 1 , part( eta , diag_stats(eta)[0] ) - diag_stats(eta)[0] + 1 ) ) ),
    WeightLemma( 'dt3-varpi1' , False , _linear( ( 1 , _same , lambda e,N,n: varpi1(N-1,1,1,n) ) , ( 1 , _same , lambda e,N,n: varpi1(N-1,-1,-1,n) ) , ( -2 , _same , lambda e,N,n: varpi1(N-1,0,0,n) ) ) ,
                 lambda eta,N,n: _unit(n,0,1-N) + _run( n , ( -i for i in range( 1 , N ) ) ) ),
    WeightLemma( 'dt3-varpi3' , True , _linear( ( 1 , _c , lambda e,N,n: varpi3(e,N,2,n) ) , ( 1 , _r , lambda e,N,n: varpi3(e,N,0,n) ) ,
                                                ( -1 , _same , lambda e,N,n: varpi3(e,N,1,n) ) , ( -1 , _rc , lambda e,N,n: varpi3(e,N,1,n) ) ) ,
                 lambda eta,N,n: _unit(n,0,N) - _run( n , ( -i for i in range( 0 , diag_stats(eta)[1] - diag_stats(eta)[0] + 1 ) ) ) ),

    WeightLemma( 'pt1-vartheta1' , True , _linear( ( 1 , _c , lambda e,N,n: vartheta1(e,N,1,1,n) ) , ( 1 , _r , lambda e,N,n: vartheta1(e,N,-1,1,n) ) ,
                                                   ( -1 , _same , lambda e,N,n: vartheta1(e,N,0,1,n) ) , ( -1 , _rc , lambda e,N,n: vartheta1(e,N,0,1,n) ) ) , _pt1_vartheta1_rhs ),
    WeightLemma( 'pt1-vartheta5-vartheta7' , True , _linear( ( 1 , _c , lambda e,N,n: vartheta5(e,N,0,n) ) , ( 1 , _r , lambda e,N,n: vartheta7(e,N,1,n) ) ,
                                                             ( -1 , _same , lambda e,N,n: vartheta2(e,N,0,n) ) , ( -1 , _rc , lambda e,N,n: vartheta2(e,N,0,n) ) ) , _pt1_vartheta572_rhs ),
    WeightLemma( 'pt1-vartheta3' , True , _linear( ( 1 , _c , lambda e,N,n: vartheta3(e,N,0,1,n) ) , ( 1 , _r , lambda e,N,n: vartheta3(e,N,2,1,n) ) ,
                                                   ( -1 , _same , lambda e,N,n: vartheta3(e,N,1,1,n) ) , ( -1 , _rc , lambda e,N,n: vartheta3(e,N,1,1,n) ) ) , _pt1_vartheta3_rhs ),
    WeightLemma( 'pt1-vartheta6-vartheta8' , True , _linear( ( 1 , _c , lambda e,N,n: vartheta6(e,N,n) ) , ( 1 , _r , lambda e,N,n: vartheta8(e,N+1,1,1,n) ) ,
                                                             ( -1 , _same , lambda e,N,n: vartheta4(e,N,0,n) ) , ( -1 , _rc , lambda e,N,n: vartheta4(e,N,0,n) ) ) , _pt1_vartheta684_rhs ),
    WeightLemma( 'pt2-vartheta1' , True , _linear( ( 1 , _c , lambda e,N,n: vartheta1(e,N,0,0,n) ) , ( 1 , _r , lambda e,N,n: vartheta1(e,N,0,2,n) ) ,
                                                   ( -1 , _same , lambda e,N,n: vartheta1(e,N,0,1,n) ) , ( -1 , _rc , lambda e,N,n: vartheta1(e,N,0,1,n) ) ) , _pt2_vartheta1_rhs ),
    WeightLemma( 'pt2-vartheta5-vartheta7' , True , _linear( ( 1 , _c , lambda e,N,n: vartheta5(e,N+1,1,n) ) , ( 1 , _r , lambda e,N,n: vartheta7(e,N,0,n) ) ,
                                                             ( -1 , _same , lambda e,N,n: vartheta2(e,N,0,n) ) , ( -1 , _rc , lambda e,N,n: vartheta2(e,N,0,n) ) ) , _pt2_vartheta572_rhs ),
    WeightLemma( 'pt2-vartheta3-shift' , False , _linear( ( 1 , _same , lambda e,N,n: vartheta3(e,N-1,-1,0,n) ) , ( 1 , _same , lambda e,N,n: vartheta3(e,N+1,3,2,n) ) ,
                                                          ( -2 , _same , lambda e,N,n: vartheta3(e,N,1,1,n) ) ) ,
                 lambda eta,N,n: _unit( n , len(eta) , N - 1 ) - _run( n , range( len(eta) + 1 , N ) ) ),
    WeightLemma( 'pt2-vartheta4-shift' , False , _linear( ( 1 , _same , lambda e,N,n: vartheta4(e,N,1,n) ) , ( 1 , _same , lambda e,N,n: vartheta4(e,N,-1,n) ) ,
                                                          ( -2 , _same , lambda e,N,n: vartheta4(e,N,0,n) ) ) , _pt2_vartheta4_shift_rhs ),
    WeightLemma( 'pt3-vartheta1-shift' , False , _linear( ( 1 , _same , lambda e,N,n: vartheta1(e,N,-1,0,n) ) , ( 1 , _same , lambda e,N,n: vartheta1(e,N,1,2,n) ) ,
                                                          ( -2 , _same , lambda e,N,n: vartheta1(e,N,0,1,n) ) ) ,
                 lambda eta,N,n: _unit( n , -len(eta) , N - len(eta) - 1 ) - _run( n , range( 1 - N , -len(eta) ) ) ),
    WeightLemma( 'pt3-vartheta2-shift' , False , _linear( ( 1 , _same , lambda e,N,n: vartheta2(e,N+1,1,n) ) , ( 1 , _same , lambda e,N,n: vartheta2(e,N-1,-1,n) ) ,
                                                          ( -2 , _same , lambda e,N,n: vartheta2(e,N,0,n) ) ) , _pt3_vartheta2_shift_rhs ),
    WeightLemma( 'pt3-vartheta3' , True , _linear( ( 1 , _c , lambda e,N,n: vartheta3(e,N+1,2,2,n) ) , ( 1 , _r , lambda e,N,n: vartheta3(e,N-1,0,0,n) ) ,
                                                   ( -1 , _same , lambda e,N,n: vartheta3(e,N,1,1,n) ) , ( -1 , _rc , lambda e,N,n: vartheta3(e,N,1,1,n) ) ) , _pt3_vartheta3_rhs ),
    WeightLemma( 'pt3-vartheta8-vartheta4' , True , _linear( ( 1 , _c , lambda e,N,n: vartheta8(e,N,-1,0,n) ) , ( 1 , _r , lambda e,N,n: vartheta8(e,N,1,0,n) ) ,
                                                             ( -1 , _same , lambda e,N,n: vartheta4(e,N,0,n) ) , ( -1 , _rc , lambda e,N,n: vartheta4(e,N,0,n) ) ) , _pt3_vartheta84_rhs ),
] }

def _composite(side,which,kind):
    def lhs(legs,N,n):
        return _composite_quotient(side,which,legs,N,n) if kind == 'K' else _unit_quotient(side,which,legs,N,n)
    def rhs(legs,N,n):
        if kind == 'unit': return _zero(n)
        return K_exponents(which,legs,n) if side == 'DT' else -K_exponents(which,legs,n)
    return WeightLemma( f'{side.lower()}{which}-{kind}' , True , lhs , rhs )

QUOTIENTS = { lemma.name: lemma for lemma in [ _composite(side,which,kind) for side in ( 'DT' , 'PT' ) for which in ( 1 , 2 , 3 ) for kind in ( 'K' , 'unit' ) ] }

def lemma_ids():
    return list(SUBLEMMAS) + list(QUOTIENTS)

##################################################################################################################################################################################################################

def admissible_N(partitions):
    """
    Smallest patch size at which every quotient identity is stated: beyond the longest part and the longest length.
    """

    return max( [ 0 ] + [ max( part(eta,1) , len(eta) ) for eta in partitions ] ) + 3

def weight_lemma_check(lemma_id,params,N_range,n):
    """
    Evaluate both sides of a weight identity as exponent vectors for every N in N_range.

    Args:
        lemma_id (str): A key of SUBLEMMAS (params is a partition eta) or of QUOTIENTS (params is a leg triple)
        params (tuple): eta, or (lam, mu, nu)
        N_range (iterable[int]): Patch sizes
        n (int): The colour modulus

    Returns:
        report (dict): {'lemma', 'params', 'checked'}

    Raises:
        LemmaViolated: At the first N where the two sides differ
    """

    lemma = SUBLEMMAS[lemma_id] if lemma_id in SUBLEMMAS else QUOTIENTS[lemma_id]
    if lemma_id in QUOTIENTS:
        which = int( lemma_id[2] )
        require_nonempty(params,which)
        shown = [ list(eta) for eta in params[:3] ]
    else:
        if lemma.nonempty and len(params) == 0: raise EmptyPartition(f'{lemma_id} needs a non-empty partition')
        shown = list(params)

    checked = 0
    for N in N_range:
        left , right = lemma.lhs(params,N,n) , lemma.rhs(params,N,n)
        if not np.array_equal(left,right):
            raise LemmaViolated( f'{lemma_id} fails at N={N}' , { 'lemma': lemma_id , 'params': shown , 'N': N , 'n': n ,
                                                                   'quotient': [ int(e) for e in left ] , 'closed_form': [ int(e) for e in right ] } )
        checked += 1

    return { 'lemma': lemma_id , 'params': shown , 'checked': checked }

def check_all_weight_lemmas(max_size,n,leg_size=2,width=3):
    """
    Run every sub-lemma on all partitions of size <= max_size and every composite quotient on all leg triples with legs of
    size <= leg_size, over `width` consecutive admissible N.

    Returns:
        failures (list[dict]): The witnesses of the violated identities
    """

    failures = []
    for lemma_id,lemma in SUBLEMMAS.items():
        for eta in partitions_up_to(max_size):
            if lemma.nonempty and len(eta) == 0: continue
            start = admissible_N( [ eta ] )
            try: weight_lemma_check( lemma_id , eta , range( start , start + width ) , n )
            except LemmaViolated as error: failures.append( error.witness )

    small = list( partitions_up_to(leg_size) )
    for lemma_id in QUOTIENTS:
        which = int( lemma_id[2] )
        for legs in ( ( lam , mu , nu ) for lam in small for mu in small for nu in small ):
            try: require_nonempty(legs,which)
            except EmptyPartition: continue
            start = admissible_N( legs[:3] + tuple( conjugate(eta) for eta in legs[:3] ) )
            try: weight_lemma_check( lemma_id , legs , range( start , start + width ) , n )
            except LemmaViolated as error: failures.append( error.witness )

    return failures
