import numpy as np

from partitions import part, cells, size, hook_color_profile
from series import LaurentSeries, vars_q, monomial, constant
from errors import Unstable


def q_bullet_exponents(t,n):
    """
    Exponent vector of the ladder monomial q_t: q_0 = 1, q_t = q_1...q_t and q_{-t} = (q_0 q_{-1} ... q_{1-t})^{-1} for t > 0.

    Args:
        t (int): The ladder index
        n (int): The colour modulus

    Returns:
        exps (numpy.ndarray): Length-n exponent vector of total degree t
    """

    exps = np.zeros( n , dtype=np.int64 )
    if t > 0: np.add.at( exps , np.arange( 1 , t + 1 ) % n , 1 )
    elif t < 0: np.add.at( exps , ( -np.arange( 0 , -t ) ) % n , -1 )
    return exps

def q_bullet(t,n):
    return monomial( vars_q(n) , q_bullet_exponents(t,n) )

def _letter_exponents(nu,n,i):
    return q_bullet_exponents( i - part(nu,i+1) , n ) # nu is 0-indexed in the alphabet

##################################################################################################################################################################################################################

def _skew_cells(xi,eta):
    return [ (i,j) for i,j in cells(xi) if not ( i < len(eta) and j < eta[i] ) ]

def _contains(xi,eta):
    return len(eta) <= len(xi) and all( eta[i] <= xi[i] for i in range( len(eta) ) )

def _skew_tableaux_sum(xi,eta,nu,n,D,cutoff):
    """
    Sum over semistandard tableaux of shape xi/eta with entries 0..cutoff (rows weakly increasing, columns strictly
    increasing) of the product of the letters x_entry, keeping terms of total degree <= D.
    """

    shape = _skew_cells(xi,eta)
    in_shape = set(shape)
    letters = [ _letter_exponents(nu,n,e) for e in range( cutoff + 1 ) ]
    degrees = [ int( x.sum() ) for x in letters ]
    lowest = min(degrees)

    terms = {}
    filling = {}
    def fill(position,exps,degree):
        if position == len(shape):
            key = tuple( int(e) for e in exps )
            terms[key] = terms.get(key,0) + 1
            return

        i , j = shape[position]
        start = max( filling.get( (i,j-1) , 0 ) if (i,j-1) in in_shape else 0 , filling[ (i-1,j) ] + 1 if (i-1,j) in in_shape else 0 )
        remaining = len(shape) - position - 1
        for entry in range( start , cutoff + 1 ):
            # letter degrees increase strictly with the entry
            if degree + degrees[entry] + remaining*lowest > D: break
            filling[ (i,j) ] = entry
            fill( position + 1 , exps + letters[entry] , degree + degrees[entry] )
        filling.pop( (i,j) , None )

    fill( 0 , np.zeros( n , dtype=np.int64 ) , 0 )
    return LaurentSeries( vars_q(n) , terms , D , len(shape)*lowest )

def skew_schur_spec(xi,eta,nu,n,D):
    """
    The skew Schur function s_{xi/eta} evaluated at the alphabet x_i = q_{i - nu_i} (i >= 0), exact to total degree D.

    Args:
        xi (tuple[int]): Outer shape
        eta (tuple[int]): Inner shape
        nu (tuple[int]): The partition shifting the alphabet
        n (int): The colour modulus
        D (int): Truncation order

    Returns:
        s (LaurentSeries): The zero series if eta is not contained in xi
    """

    if not _contains(xi,eta): return LaurentSeries( vars_q(n) , {} , D , 0 )

    cutoff = D + ( size(xi) + 1 ) * ( part(nu,1) + 1 )
    s = _skew_tableaux_sum(xi,eta,nu,n,D,cutoff)
    witness = s.first_mismatch( _skew_tableaux_sum(xi,eta,nu,n,D,cutoff+1) , D )
    if witness is not None:
        raise Unstable( f'skew Schur sum changes past entry {cutoff}' , { 'xi': list(xi) , 'eta': list(eta) , 'nu': list(nu) , 'n': n , **witness } )
    return s

def hook_series_H(nu,n,D):
    """
    H_nu = prod over cells of 1/(1 - q^hook), with the hook of each cell coloured by i-j mod n.

    Args:
        nu (tuple[int]): A partition
        n (int): The colour modulus
        D (int): Truncation order

    Returns:
        H (LaurentSeries)
    """

    variables = vars_q(n)
    H = constant( variables , 1 , D )
    for cell in cells(nu):
        hook = hook_color_profile(nu,n,cell)
        length = int( hook.sum() )
        H = H * LaurentSeries( variables , { tuple( int(e) for e in k*hook ): 1 for k in range( D // length + 1 ) } , D , 0 )
    return H

def loop_schur_prefactor(nu,n):
    exps = np.zeros( n , dtype=np.int64 )
    for i,j in cells(nu): exps[ (i-j) % n ] += j
    return exps

def loop_schur(nu,n,D):
    """
    The loop Schur function (prod_{(i,j) in nu} q_{i-j}^j) * H_nu, truncated to D.
    """

    return ( monomial( vars_q(n) , loop_schur_prefactor(nu,n) ) * hook_series_H(nu,n,D) ).truncate(D)

def loop_schur_ssyt(nu,n,D):
    """
    The tableau form of the loop Schur function: the sum over fillings T >= 0 of nu, strictly increasing along rows and
    weakly increasing down columns, of prod_{(i,j)} q_{i-j}^{T(i,j)}, kept to total degree D.

    Args:
        nu (tuple[int]): A partition
        n (int): The colour modulus
        D (int): Truncation order

    Returns:
        s (LaurentSeries)
    """

    shape = list( cells(nu) )
    terms = {}
    filling = {}
    def fill(position,exps,degree):
        if position == len(shape):
            key = tuple( int(e) for e in exps )
            terms[key] = terms.get(key,0) + 1
            return

        i , j = shape[position]
        start = max( filling[ (i,j-1) ] + 1 if j > 0 else 0 , filling[ (i-1,j) ] if i > 0 else 0 )
        for entry in range( start , D - degree + 1 ):
            filling[ (i,j) ] = entry
            step = np.zeros( n , dtype=np.int64 )
            step[ (i-j) % n ] = entry
            fill( position + 1 , exps + step , degree + entry )
        filling.pop( (i,j) , None )

    fill( 0 , np.zeros( n , dtype=np.int64 ) , 0 )
    return LaurentSeries( vars_q(n) , terms , D , 0 )
