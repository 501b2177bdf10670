from regions import LegTriple, region_sets, pi_min_colored_volume, enumerate_dt, box_color_counts
from series import LaurentSeries, vars_q, bar_involution


def colored_volume(legs,extra):
    """
    Coloured renormalised volume ||pi||_l of pi = pi_min + extra: the pi_min value plus one per extra box of colour l.

    Args:
        legs (LegTriple): The asymptotic partitions and colour modulus
        extra (frozenset): The boxes outside pi_min

    Returns:
        volume (numpy.ndarray): Length-n integer exponent vector
    """

    return pi_min_colored_volume(legs) + box_color_counts(extra,legs.n)

def dt_vertex(n,legs,D):
    """
    The DT Z_n-vertex V^n_{lam,mu,nu} = sum over 3D partitions of q^{||pi||}, exact to total degree D.

    Args:
        n (int): The colour modulus
        legs (tuple): (lam, mu, nu)
        D (int): Truncation order

    Returns:
        V (LaurentSeries): Series in q_0,...,q_{n-1} with floor ||pi_min||
    """

    legs = LegTriple( *legs[:3] , n )
    regions = region_sets(legs)
    base = -regions.ii_counts - 2*regions.iii_counts
    floor = int( base.sum() )

    terms = {}
    for extra in enumerate_dt( legs , D - floor ): # ||pi|| = floor + |extra|
        exps = tuple( int(e) for e in base + box_color_counts(extra,n) )
        terms[exps] = terms.get(exps,0) + 1

    return LaurentSeries( vars_q(n) , terms , D , floor )

def dt_symmetry_check(n,legs,D):
    """
    Check V^n_{lam,mu,nu} = bar(V^n_{mu',lam',nu'}) to total degree D.
    """

    legs = LegTriple( *legs[:3] , n )
    return dt_vertex(n,legs,D).agrees_with( bar_involution( dt_vertex( n , legs.transposed() , D ) , n ) , D )
