from fractions import Fraction
from typing import NamedTuple

import numpy as np

from errors import EmptyPartition, CellOutOfShape, InconsistentDerivation


HALF = Fraction(1,2)
ROLES = ( 'edge_or_leg3' , 'leg1' , 'leg2' )


class MayaDiagram(NamedTuple):
    """
    Finite deviation of a charged Maya diagram from the vacuum {-1/2,-3/2,...}.

    Attributes:
        positives (frozenset[Fraction]): The positive half-integers of the set (S+)
        negative_gaps (frozenset[Fraction]): The negative half-integers missing from the set (S-)
        charge (int): |S+| - |S-|
    """

    positives: frozenset
    negative_gaps: frozenset
    charge: int

##################################################################################################################################################################################################################

def parse_partition(text):
    """
    Parse the text syntax of a partition, e.g. "3,1". The empty string is the empty partition.

    Args:
        text (str): Comma-separated parts

    Returns:
        eta (tuple[int]): The partition
    """

    text = text.strip()
    if text == '': return ()

    parts = tuple( int(part) for part in text.split(',') )
    if any( part <= 0 for part in parts ) or any( parts[i] < parts[i+1] for i in range( len(parts) - 1 ) ):
        raise ValueError(f'"{text}" is not a weakly decreasing list of positive integers')

    return parts

def format_partition(eta):
    return ','.join( str(part) for part in eta )

def size(eta):
    return sum(eta)

def part(eta,i):
    """
    The 1-indexed part eta_i, with eta_i = 0 beyond the length of eta.
    """

    return eta[i-1] if 1 <= i <= len(eta) else 0

def cells(eta):
    """
    Iterate over the 0-indexed cells (i,j) of eta, row by row.
    """

    for i,row_length in enumerate(eta):
        for j in range(row_length): yield (i,j)

def conjugate(eta):
    """
    Transpose the cell diagram of eta: (i,j) is a cell of the result iff (j,i) is a cell of eta.

    Args:
        eta (tuple[int]): A partition

    Returns:
        eta_conjugate (tuple[int]): The conjugate partition
    """

    if len(eta) == 0: return ()
    return tuple( sum( 1 for row_length in eta if row_length > j ) for j in range( eta[0] ) )

def partitions_of(k,max_part=None):
    """
    Generate every partition of k in reverse-lexicographic order.

    Args:
        k (int): The size
        max_part (int): Upper bound on the first part (defaults to k)

    Returns:
        generator of tuple[int]
    """

    if max_part is None: max_part = k
    if k == 0:
        yield ()
        return

    for first in range( min(k,max_part) , 0 , -1 ):
        for rest in partitions_of( k - first , first ): yield (first,) + rest

def partitions_up_to(k):
    for size_ in range(k+1): yield from partitions_of(size_)

##################################################################################################################################################################################################################

def maya_diagram(eta,charge=0):
    """
    Compute the Maya diagram {eta_i - i + 1/2 + charge : i >= 1} as its finite deviation from the vacuum.

    Args:
        eta (tuple[int]): A partition
        charge (int): The shift applied to every element

    Returns:
        maya (MayaDiagram): The charged Maya diagram
    """

    bound = len(eta) + abs(charge) + 1
    elements = { part(eta,i) - i + HALF + charge for i in range( 1 , bound + 1 ) } # everything below -bound+1/2+charge is in the set
    lowest = -bound + HALF + charge

    positives = frozenset( t for t in elements if t > 0 )
    negative_gaps = frozenset( -k + HALF for k in range( 1 , bound + abs(charge) + 1 ) if lowest <= -k + HALF and ( -k + HALF ) not in elements )

    maya = MayaDiagram( positives , negative_gaps , len(positives) - len(negative_gaps) )
    assert maya.charge == charge, maya
    return maya

def partition_from_maya(maya):
    """
    Recover the partition whose uncharged Maya diagram is the given set shifted by minus its charge.

    Args:
        maya (MayaDiagram): Any finite deviation from the vacuum

    Returns:
        eta,charge (tuple(tuple[int],int)): The partition and the charge c(S) = |S+| - |S-|
    """

    charge = len(maya.positives) - len(maya.negative_gaps)
    lowest_gap = min( maya.negative_gaps , default=HALF )

    descending = sorted( maya.positives , reverse=True )
    t = -HALF
    while t >= lowest_gap - 1: # one element past the lowest gap fixes the tail
        if t not in maya.negative_gaps: descending.append(t)
        t -= 1

    parts = [ int( t - charge + i - HALF ) for i,t in enumerate( descending , start=1 ) ]
    return tuple( p for p in parts if p > 0 ) , charge

##################################################################################################################################################################################################################

def diag_stats(eta):
    """
    Diagonal statistics d(eta) = max{i : eta_i >= i} and d~(eta) = max{i : eta_i >= d(eta)}.

    Args:
        eta (tuple[int]): A non-empty partition

    Returns:
        d,d_tilde (tuple(int,int))
    """

    if len(eta) == 0: raise EmptyPartition('diagonal statistics need a non-empty partition')

    d = max( i for i in range( 1 , len(eta) + 1 ) if eta[i-1] >= i )
    d_tilde = max( i for i in range( 1 , len(eta) + 1 ) if eta[i-1] >= d )
    return d , d_tilde

def _derive_maya(eta,kind):
    maya = maya_diagram(eta,0)
    positives , negative_gaps = set(maya.positives) , set(maya.negative_gaps)

    if 'r' in kind: positives.remove( min(positives) )
    if 'c' in kind: negative_gaps.remove( max(negative_gaps) )

    derived,_ = partition_from_maya( MayaDiagram( frozenset(positives) , frozenset(negative_gaps) , len(positives) - len(negative_gaps) ) )
    return derived

def _derive_closed_form(eta,kind):
    d , d_tilde = diag_stats(eta)

    if kind == 'r':
        parts = [ part(eta,i) + 1 if i < d else part(eta,i+1) for i in range( 1 , len(eta) + 1 ) ]
    elif kind == 'c':
        parts = [ part(eta,i) - 1 if i <= d_tilde else d - 1 if i == d_tilde + 1 else part(eta,i-1) for i in range( 1 , len(eta) + 2 ) ]
    else:
        parts = [ d - 1 if d <= i <= d_tilde else part(eta,i) for i in range( 1 , len(eta) + 1 ) ]

    return tuple( p for p in parts if p > 0 )

def derive(eta,kind):
    """
    The modified partitions eta^r, eta^c and eta^rc: remove the smallest positive Maya element (r), fill the largest
    negative gap (c), or both (rc). Both the Maya-diagram definition and the part-wise closed form are evaluated.

    Args:
        eta (tuple[int]): A non-empty partition
        kind (str): One of 'r', 'c', 'rc'

    Returns:
        derived (tuple[int]): The modified partition
    """

    if kind not in ( 'r' , 'c' , 'rc' ): raise ValueError(f'unknown derivation {kind!r}')
    if len(eta) == 0: raise EmptyPartition(f'eta^{kind} is undefined for the empty partition')

    from_maya = _derive_maya(eta,kind)
    closed = _derive_closed_form(eta,kind)
    if from_maya != closed:
        raise InconsistentDerivation( f'eta^{kind} disagrees for eta={eta}' ,
                                      { 'eta': list(eta) , 'kind': kind , 'maya': list(from_maya) , 'closed_form': list(closed) } )
    return closed

##################################################################################################################################################################################################################

def cell_color(i,j,n,role='edge_or_leg3'):
    if role == 'edge_or_leg3': return (i-j) % n
    elif role == 'leg1': return (-j) % n
    elif role == 'leg2': return i % n
    raise ValueError(f'unknown colouring role {role!r}')

def color_counts(eta,n,role='edge_or_leg3'):
    """
    Vector of the number of cells of eta in each colour class mod n.

    Args:
        eta (tuple[int]): A partition
        n (int): The colour modulus
        role (str): 'edge_or_leg3' colours (i,j) by i-j, 'leg1' by -j and 'leg2' by i

    Returns:
        counts (numpy.ndarray): Length-n integer array
    """

    colors = [ cell_color(i,j,n,role) for i,j in cells(eta) ]
    return np.bincount( np.array( colors , dtype=np.int64 ) , minlength=n ).astype(np.int64)

def colored_count(eta,n,role,l):
    return int( color_counts(eta,n,role)[ l % n ] )

def is_multi_regular(eta,n):
    return size(eta) % n == 0 and bool( np.all( color_counts(eta,n) == size(eta) // n ) )

def hook_color_profile(nu,n,cell):
    """
    Number of cells of each colour (i-j mod n) in the hook of the given cell.

    Args:
        nu (tuple[int]): A partition
        n (int): The colour modulus
        cell (tuple(int,int)): A 0-indexed cell (i,j) of nu

    Returns:
        profile (numpy.ndarray): Length-n integer array summing to the hook length
    """

    i , j = cell
    if not ( 0 <= i < len(nu) and 0 <= j < nu[i] ): raise CellOutOfShape(f'cell {cell} is not in {nu}')

    hook = [ (i,j) ] + [ (i,jj) for jj in range( j + 1 , nu[i] ) ] + [ (ii,j) for ii in range( i + 1 , len(nu) ) if nu[ii] > j ]
    return np.bincount( np.array( [ (a-b) % n for a,b in hook ] , dtype=np.int64 ) , minlength=n ).astype(np.int64)

def A_stat(lam,k,n):
    return sum( (i+k) // n for i,_ in cells(lam) )

def C_stat(lam,m,m_prime,color_class=None):
    """
    Sum of (-m*i - m'*j + 1) over the cells of lam, or over the cells with i-j = k mod n when color_class = (k,n).
    """

    if color_class is None: return sum( -m*i - m_prime*j + 1 for i,j in cells(lam) )

    k , n = color_class
    return sum( -m*i - m_prime*j + 1 for i,j in cells(lam) if (i-j) % n == k % n )

##################################################################################################################################################################################################################

def _length_relation_holds(eta):
    d , _ = diag_stats(eta)
    r , c , rc = derive(eta,'r') , derive(eta,'c') , derive(eta,'rc')
    l = len(eta)

    if d == 1 and eta[0] == 1: return len(r) == l - 1 and len(c) == 0 and len(rc) == 0
    if d == 1: return len(r) == l - 1 and len(c) == 1 and len(rc) == 0
    return len(r) == l - 1 and len(c) == l + 1 and len(rc) == l

def _diag_relation_holds(eta):
    d , _ = diag_stats(eta)
    r , c , rc = derive(eta,'r') , derive(eta,'c') , derive(eta,'rc')
    d_of = lambda x: diag_stats(x)[0] if len(x) > 0 else 0

    r_ok = ( d_of(r) == d ) == ( part(eta,d+1) == d ) and ( d_of(r) == d - 1 ) == ( part(eta,d+1) < d )
    c_ok = ( d_of(c) == d ) == ( part(eta,d) > d ) and ( d_of(c) == d - 1 ) == ( part(eta,d) == d )
    return r_ok and c_ok and d_of(rc) == d - 1

def _special_values_hold(eta):
    d , d_tilde = diag_stats(eta)
    r = derive(eta,'r')
    d_r = diag_stats(r)[0] if len(r) > 0 else 0

    if d > 1 and d_r == d - 1 and d_tilde != d: return False
    if d > 1 and d_r == d:
        if d_tilde < d + 1 or any( part(eta,i) != d for i in range( d + 1 , d_tilde + 1 ) ): return False
    if d == 1:
        if d_tilde != len(eta) or any( part(eta,i) != 1 for i in range( 2 , len(eta) + 1 ) ): return False
    return ( len( derive(eta,'c') ) == 0 ) == all( p == 1 for p in eta )

def _value_sets_hold(eta):
    d , _ = diag_stats(eta)
    r , c = derive(eta,'r') , derive(eta,'c')
    window = range( 1 , len(eta) + 3 )

    return { i for i in window if part(r,i) > i + 1 } == set( range( 1 , d ) ) and \
           { i for i in window if part(c,i) >= i - 1 } == set( range( 1 , d + 1 ) )

def check_partition_lemmas(max_size):
    """
    Exhaustively check the r/c/rc identities on every non-empty partition of size at most max_size.

    Args:
        max_size (int): Largest partition size to check

    Returns:
        failures (list[dict]): One witness per (partition, identity) that fails; empty when everything holds
    """

    failures = []
    for eta in partitions_up_to(max_size):
        if len(eta) == 0: continue

        try: derived = { kind: derive(eta,kind) for kind in ( 'r' , 'c' , 'rc' ) }
        except InconsistentDerivation as error:
            failures.append( error.witness )
            continue

        d , _ = diag_stats(eta)
        eta_t = conjugate(eta)
        checks = { 'size_decrease': all( size(x) < size(eta) for x in derived.values() ),
                   'length_relation': _length_relation_holds(eta),
                   'diag_relation': _diag_relation_holds(eta),
                   'special_values': _special_values_hold(eta),
                   'transpose': conjugate( derived['c'] ) == derive(eta_t,'r') and \
                                conjugate( derived['r'] ) == derive(eta_t,'c') and \
                                conjugate( derived['rc'] ) == derive(eta_t,'rc'),
                   'value_sets': _value_sets_hold(eta),
                   'conjugate_diagonal': diag_stats(eta_t)[0] == d and diag_stats(eta_t)[1] == part(eta,d) }

        for name,holds in checks.items():
            if not holds: failures.append( { 'eta': list(eta) , 'identity': name } )

    return failures
