from typing import NamedTuple

import numpy as np

from partitions import cells, conjugate


AXES = ( (1,0,0) , (0,1,0) , (0,0,1) )


class LegTriple(NamedTuple):
    lam: tuple
    mu: tuple
    nu: tuple
    n: int = 1

    def transposed(self):
        """
        The triple (mu', lam', nu') of the bar-transpose symmetry.
        """

        return LegTriple( conjugate(self.mu) , conjugate(self.lam) , conjugate(self.nu) , self.n )


class RegionSets(NamedTuple):
    """
    Attributes:
        ii_hat (tuple[frozenset]): (II_hat1, II_hat2, II_hat3), II_hat_i = (Cyl_j & Cyl_k) minus Cyl_i
        iii (frozenset): Cyl_1 & Cyl_2 & Cyl_3
        ii_counts (numpy.ndarray): |II|_l for each colour l = i-j mod n
        iii_counts (numpy.ndarray): |III|_l for each colour l
        columns (tuple[tuple]): For each leg l, the cross-section cells whose negative column is Cyl_l^-
    """

    ii_hat: tuple
    iii: frozenset
    ii_counts: np.ndarray
    iii_counts: np.ndarray
    columns: tuple

    @property
    def ii(self):
        return self.ii_hat[0] | self.ii_hat[1] | self.ii_hat[2]

##################################################################################################################################################################################################################

def box_color(box,n):
    return ( box[0] - box[1] ) % n

def box_color_counts(boxes,n):
    colors = np.array( [ box_color(box,n) for box in boxes ] , dtype=np.int64 )
    return np.bincount( colors , minlength=n ).astype(np.int64)

def _in_partition(eta,a,b):
    return a >= 0 and b >= 0 and a < len(eta) and b < eta[a]

def cyl_membership(legs,box):
    """
    Membership of a box in the three leg cylinders, with the +/- split.

    Args:
        legs (LegTriple): The asymptotic partitions
        box (tuple(int,int,int)): A box of Z^3

    Returns:
        membership (list[str or None]): Entry l is '+' if box is in Cyl_l^+, '-' if in Cyl_l^-, None otherwise
    """

    i , j , k = box
    in_cylinder = ( _in_partition(legs.lam,j,k) , _in_partition(legs.mu,k,i) , _in_partition(legs.nu,i,j) )
    axis_coordinate = ( i , j , k )
    return [ ( '+' if axis_coordinate[l] >= 0 else '-' ) if in_cylinder[l] else None for l in range(3) ]

def in_i_plus(legs,box):
    return min(box) >= 0 and any( cyl_membership(legs,box) )

def in_i_minus(legs,box):
    return '-' in cyl_membership(legs,box)

def region_sets(legs):
    """
    Compute the finite sets II_hat1, II_hat2, II_hat3 and III of a leg triple together with their coloured sizes.

    Args:
        legs (LegTriple): The asymptotic partitions and colour modulus

    Returns:
        regions (RegionSets)
    """

    # pairwise intersections lie in the octant and are bounded by the part lengths
    bound = max( [ len(legs.lam) , len(legs.mu) , len(legs.nu) ] + list(legs.lam[:1]) + list(legs.mu[:1]) + list(legs.nu[:1]) + [0] )
    ii_hat = [ set() , set() , set() ]
    iii = set()
    for i in range(bound):
        for j in range(bound):
            for k in range(bound):
                membership = [ m is not None for m in cyl_membership( legs , (i,j,k) ) ]
                if sum(membership) == 3: iii.add( (i,j,k) )
                elif sum(membership) == 2: ii_hat[ membership.index(False) ].add( (i,j,k) )

    columns = ( tuple( cells(legs.lam) ) , tuple( cells(legs.mu) ) , tuple( cells(legs.nu) ) )
    ii = ii_hat[0] | ii_hat[1] | ii_hat[2]
    return RegionSets( tuple( frozenset(s) for s in ii_hat ) , frozenset(iii) , box_color_counts(ii,legs.n) , box_color_counts(iii,legs.n) , columns )

def pi_min_colored_volume(legs):
    """
    Coloured renormalised volume (-|II|_l - 2|III|_l)_l of the minimal 3D partition.
    """

    regions = region_sets(legs)
    return -regions.ii_counts - 2*regions.iii_counts

def series_floor(legs):
    return int( pi_min_colored_volume(legs).sum() )

##################################################################################################################################################################################################################

def _predecessors(box):
    return [ tuple( c - a for c,a in zip(box,axis) ) for axis in AXES ]

def _successors(box):
    return [ tuple( c + a for c,a in zip(box,axis) ) for axis in AXES ]

def is_downward_closed(legs,extra):
    """
    Condition (i) of a 3D partition for pi = pi_min + extra: every predecessor with non-negative coordinates is in pi.
    """

    in_pi = lambda w: w in extra or in_i_plus(legs,w) or False
    for box in extra:
        if min(box) < 0 or in_i_plus(legs,box): return False
        for w in _predecessors(box):
            if min(w) >= 0 and not in_pi(w): return False
    return True

def enumerate_dt(legs,k_max):
    """
    Stream every 3D partition pi asymptotic to the legs with at most k_max boxes outside pi_min = I+ u II u III,
    by repeatedly adding addable boxes. Each partition is produced once, ordered by size and then by its sorted box list.

    Args:
        legs (LegTriple): The asymptotic partitions
        k_max (int): Maximal number of extra boxes

    Returns:
        generator of frozenset: The extra boxes of each 3D partition
    """

    def addable(extra):
        # the candidates are the origin, successors of extra boxes and the corners of pi_min
        candidates = { (0,0,0) } | corners
        for box in extra: candidates.update( _successors(box) )
        return [ w for w in candidates if w not in extra and not in_i_plus(legs,w) and
                 all( min(p) < 0 or p in extra or in_i_plus(legs,p) for p in _predecessors(w) ) ]

    corners = set()
    for cylinder_box in _pi_min_boundary(legs):
        corners.update( _successors(cylinder_box) )

    level = [ frozenset() ]
    for size_ in range( k_max + 1 ):
        for extra in level:
            assert is_downward_closed(legs,extra)
            yield extra
        if size_ == k_max: break

        next_level = { extra | { box } for extra in level for box in addable(extra) }
        level = sorted( next_level , key=lambda s: sorted(s) )

def _pi_min_boundary(legs):
    """
    Boxes of pi_min whose successors can leave pi_min: the near-origin parts of the three cylinders.
    """

    bound = max( [ len(legs.lam) , len(legs.mu) , len(legs.nu) ] + list(legs.lam[:1]) + list(legs.mu[:1]) + list(legs.nu[:1]) ) + 1
    boundary = []
    for j,k in cells(legs.lam): boundary.extend( (i,j,k) for i in range(bound) )
    for k,i in cells(legs.mu): boundary.extend( (i,j,k) for j in range(bound) )
    for i,j in cells(legs.nu): boundary.extend( (i,j,k) for k in range(bound) )
    return boundary

##################################################################################################################################################################################################################

def in_a_region(legs,regions,box):
    return box in regions.iii or in_i_minus(legs,box)

def in_b_region(regions,box):
    return box in regions.iii or box in regions.ii

def ab_closed(legs,A,B,regions=None):
    """
    Closure conditions of an AB configuration: a box of I- u III with a predecessor in A is in A, and a box of
    II u III with a predecessor in B is in B.
    """

    if regions is None: regions = region_sets(legs)
    if any( not in_a_region(legs,regions,w) for w in A ) or any( not in_b_region(regions,w) for w in B ): return False

    for boxes,inside in ( ( A , lambda w: in_a_region(legs,regions,w) ) , ( B , lambda w: in_b_region(regions,w) ) ):
        for box in boxes:
            for w in _successors(box):
                if inside(w) and w not in boxes: return False
    return True

def _up_sets(window,budget):
    """
    Every subset S of the finite window, |S| <= budget, that is closed under in-window successors.
    """

    def addable(current):
        return [ w for w in window if w not in current and all( s not in window or s in current for s in _successors(w) ) ]

    level = [ frozenset() ]
    found = []
    for size_ in range( budget + 1 ):
        found.extend(level)
        if size_ == budget: break
        level = sorted( { current | { w } for current in level for w in addable(current) } , key=lambda s: sorted(s) )
    return found

def enumerate_ab_all(legs,budget):
    """
    Stream every AB configuration (A in I- u III, B in II u III, both closed) with |A|+|B| <= budget.

    Args:
        legs (LegTriple): The asymptotic partitions
        budget (int): Bound on |A|+|B|

    Returns:
        generator of tuple(frozenset,frozenset): The pairs (A,B), ordered by |A|+|B|, then sorted A, then sorted B
    """

    regions = region_sets(legs)

    # an I- column can only hold a prefix of depth <= budget
    a_window = set(regions.iii)
    for j,k in cells(legs.lam): a_window.update( (-depth,j,k) for depth in range( 1 , budget + 1 ) )
    for k,i in cells(legs.mu): a_window.update( (i,-depth,k) for depth in range( 1 , budget + 1 ) )
    for i,j in cells(legs.nu): a_window.update( (i,j,-depth) for depth in range( 1 , budget + 1 ) )
    b_window = set(regions.iii) | set(regions.ii)

    a_sets = _up_sets(a_window,budget)
    b_sets = _up_sets(b_window,budget)

    pairs = [ ( A , B ) for A in a_sets for B in b_sets if len(A) + len(B) <= budget ]
    pairs.sort( key=lambda pair: ( len(pair[0]) + len(pair[1]) , sorted(pair[0]) , sorted(pair[1]) ) )
    for A,B in pairs:
        assert ab_closed(legs,A,B,regions)
        yield A , B
