from fractions import Fraction
from functools import lru_cache
from typing import NamedTuple

import numpy as np
import networkx as nx

from partitions import cells, maya_diagram
from regions import LegTriple, region_sets, cyl_membership, _predecessors, _successors, enumerate_ab_all
from errors import PatchTooSmall, Unstable


# stabilisation size N = STABILIZATION_SCALE * (boxes + leg extents) + STABILIZATION_OFFSET
STABILIZATION_SCALE = 2
STABILIZATION_OFFSET = 4

UNIT = ( (1,0,0) , (0,1,0) , (0,0,1) )
SECTOR_COLORS = ( ( 'blue' , 'red' ) , ( 'red' , 'green' ) , ( 'green' , 'blue' ) ) # (positive labels, negative labels)


class BoundaryEdge(NamedTuple):
    edge: tuple       # lattice edge (canonical point, direction)
    sector: int       # 0, 1, 2 for the legs lam, mu, nu
    label: Fraction   # +-1/2, ..., +-(N-1/2)


class HoneycombPatch(NamedTuple):
    """
    The honeycomb graph H(N) dual to the hexagon of side N in the triangular lattice Z^3/(1,1,1).

    Faces are lattice points p with max(p)-min(p) <= N, stored by their representative with min(p) = 0; the central face is
    the origin. Vertices are unit triangles ('+',q) = {q, q+e1, q+e1+e2} and ('-',q) = {q, q+e1, q+e1+e3}, which are the two
    bipartite classes. A honeycomb edge crosses a lattice edge (p,l) = {p, p+e_l}.

    Attributes:
        N (int): Side length
        points (frozenset): The faces
        graph (networkx.Graph): Triangles joined across interior lattice edges; each edge stores its lattice edge as 'edge'
        edge_triangles (dict): Interior lattice edge -> its two triangles
        boundary (dict): Triangle -> BoundaryEdge for the 6N triangles with an edge on the hexagon boundary
        edge_weights (dict): Interior lattice edge (p,2) -> (colour p1-p2, exponent p3-p2+N); other edges have weight 1
    """

    N: int
    points: frozenset
    graph: nx.Graph
    edge_triangles: dict
    boundary: dict
    edge_weights: dict


class DimerConfig(NamedTuple):
    patch: HoneycombPatch
    side: str            # 'A' or 'B'
    edges: frozenset     # interior lattice edges carrying a dimer
    leaving: frozenset   # triangles whose dimer crosses the hexagon boundary


class NodeSet(NamedTuple):
    """
    Attributes:
        triangles (frozenset): The nodes
        by_sector (tuple[list]): Per sector, the (label, triangle) pairs sorted by decreasing label
        colors (dict): Triangle -> colour name
        pairing (list[tuple]): The rainbow pairing, as pairs of triangles
    """

    triangles: frozenset
    by_sector: tuple
    colors: dict
    pairing: list


class DoubleDimerConfig(NamedTuple):
    patch: HoneycombPatch
    graph: nx.MultiGraph
    loops: list          # vertex cycles of length > 2
    doubled: list        # pairs of triangles matched on both sides
    paths: list          # (start, end, vertices) between degree-one vertices

##################################################################################################################################################################################################################

def _canon(v):
    m = min(v)
    return ( v[0] - m , v[1] - m , v[2] - m )

def _plus(v,w):
    return ( v[0] + w[0] , v[1] + w[1] , v[2] + w[2] )

def _triangle_vertices(triangle):
    sign , q = triangle
    q1 = _plus(q,UNIT[0])
    return ( q , q1 , _plus( q1 , UNIT[1] if sign == '+' else UNIT[2] ) )

def _triangle_edges(triangle):
    """
    The three lattice edges (a,l) of a triangle, with a an actual (non-canonical) lattice vector.
    """

    sign , q = triangle
    q1 = _plus(q,UNIT[0])
    if sign == '+': return [ ( q , 0 ) , ( q1 , 1 ) , ( _plus(q1,UNIT[1]) , 2 ) ]
    return [ ( q , 0 ) , ( q1 , 2 ) , ( _plus(q1,UNIT[2]) , 1 ) ]

def _in_patch(v,N):
    return max(v) - min(v) <= N

@lru_cache(maxsize=8)
def build_patch(N):
    """
    Build the honeycomb patch H(N) with its sector labels and edge-weight table.

    Args:
        N (int): Side length, at least 2

    Returns:
        patch (HoneycombPatch)
    """

    assert N >= 2

    points = frozenset( (0,b,c) for b in range(N+1) for c in range(N+1) ) | frozenset( (a,0,c) for a in range(1,N+1) for c in range(N+1) ) \
           | frozenset( (a,b,0) for a in range(1,N+1) for b in range(1,N+1) )

    triangles = [ ( sign , q ) for q in sorted(points) for sign in ( '+' , '-' ) if all( _in_patch(v,N) for v in _triangle_vertices( ( sign , q ) ) ) ]

    owners = {}
    for triangle in triangles:
        for a,l in _triangle_edges(triangle): owners.setdefault( ( _canon(a) , l ) , [] ).append(triangle)

    graph = nx.Graph()
    for sign , q in triangles: graph.add_node( ( sign , q ) , side=sign )

    edge_triangles , boundary , edge_weights = {} , {} , {}
    for edge,owned in owners.items():
        a , l = edge
        if len(owned) == 2:
            edge_triangles[edge] = tuple(owned)
            graph.add_edge( *owned , edge=edge )
            if l == 2: edge_weights[edge] = ( a[0] - a[1] , a[2] - a[1] + N )
            continue

        # the midpoint's smallest coordinate names the sector; the label is x_c - x_r for (r,c) cyclically after it
        doubled = tuple( 2*x + ( 1 if axis == l else 0 ) for axis,x in enumerate(a) )
        sector = int( np.argmin(doubled) )
        label = Fraction( doubled[ (sector+2) % 3 ] - doubled[ (sector+1) % 3 ] , 2 )
        boundary[ owned[0] ] = BoundaryEdge( edge , sector , label )

    assert len(triangles) == 6*N*N and len(boundary) == 6*N, ( len(triangles) , len(boundary) )
    return HoneycombPatch( N , points , graph , edge_triangles , boundary , edge_weights )

##################################################################################################################################################################################################################

def nodes(legs,N):
    """
    The nodes of the double-dimer model: boundary triangles of sector a whose label is not in S+ u S- of leg a.

    Args:
        legs (LegTriple or tuple): The asymptotic partitions
        N (int): Patch size

    Returns:
        node_set (NodeSet)
    """

    patch = build_patch(N)
    excluded = []
    for sector,eta in enumerate( legs[:3] ):
        maya = maya_diagram(eta)
        labels = maya.positives | maya.negative_gaps
        if any( abs(label) > N - Fraction(1,2) for label in labels ): raise PatchTooSmall( f'leg {sector} does not fit into H({N})' , { 'N': N , 'leg': list(eta) } )
        excluded.append(labels)

    by_sector = ( [] , [] , [] )
    for triangle,boundary in patch.boundary.items():
        if boundary.label not in excluded[boundary.sector]: by_sector[boundary.sector].append( ( boundary.label , triangle ) )

    colors , pairing = {} , []
    for sector,entries in enumerate(by_sector):
        entries.sort( reverse=True )
        for label,triangle in entries: colors[triangle] = SECTOR_COLORS[sector][ 0 if label > 0 else 1 ]
        pairing.extend( ( entries[j][1] , entries[ len(entries) - 1 - j ][1] ) for j in range( len(entries) // 2 ) )

    triangles = frozenset( triangle for entries in by_sector for _,triangle in entries )
    return NodeSet( triangles , by_sector , colors , pairing )

def _side_boxes(legs,side,boxset,N):
    """
    The finite part of the stepped region, R2 u (I- u III) minus A for side 'A' or R1 u (II u III) minus B for side 'B',
    with the I- columns cut at the depth the patch can see.
    """

    regions = region_sets(legs)
    if side == 'B': return ( set(regions.ii) | set(regions.iii) ) - set(boxset)

    finite = set(regions.iii)
    for j,k in cells(legs.lam): finite.update( (-depth,j,k) for depth in range( 1 , N + 2 ) )
    for k,i in cells(legs.mu): finite.update( (i,-depth,k) for depth in range( 1 , N + 2 ) )
    for i,j in cells(legs.nu): finite.update( (i,j,-depth) for depth in range( 1 , N + 2 ) )
    return finite - set(boxset)

def dimers_from_boxset(patch,side,legs,boxset):
    """
    The dimer configuration of the lozenge tiling of the stepped surface of side A or B, restricted to the patch.

    The height of a face p is h(p) = max{t : p + t(1,1,1) in X}; a lattice edge {p, p+e_l} carries a dimer iff
    h(p+e_l) = h(p) - 1.

    Args:
        patch (HoneycombPatch): The patch H(N)
        side (str): 'A' (X = R2 u (I- u III) minus A) or 'B' (X = R1 u (II u III) minus B)
        legs (LegTriple or tuple): The asymptotic partitions
        boxset (frozenset): A or B

    Returns:
        dimers (DimerConfig)
    """

    legs = LegTriple( *legs[:3] , legs[3] if len(legs) > 3 else 1 )
    N = patch.N
    for box in boxset:
        if max(box) - min(box) > N - 2: raise PatchTooSmall( f'box {box} is too far out for H({N})' , { 'N': N , 'box': list(box) } )

    shifts = {}
    for w in _side_boxes(legs,side,boxset,N):
        key = _canon(w)
        shifts[key] = max( shifts.get( key , min(w) ) , min(w) )

    def height(v):
        c = _canon(v)
        base = -1 if side == 'B' else -sorted(c)[1] - 1
        return max( base , shifts.get( c , base ) ) - min(v)

    heights = {}
    def h(v):
        c = _canon(v)
        if c not in heights: heights[c] = height(c)
        return heights[c] - min(v)

    edges , leaving = set() , set()
    for triangle in patch.graph.nodes:
        matched = [ ( _canon(a) , l ) for a,l in _triangle_edges(triangle) if h( _plus( a , UNIT[l] ) ) == h(a) - 1 ]
        assert len(matched) == 1, ( triangle , matched )
        if matched[0] in patch.edge_triangles: edges.add( matched[0] )
        else: leaving.add(triangle)

    dimers = DimerConfig( patch , side , frozenset(edges) , frozenset(leaving) )
    if side == 'B' and leaving:
        raise PatchTooSmall( f'the B-side tiling leaves H({N})' , { 'N': N , 'leaving': len(leaving) } )
    if side == 'A' and dimers.leaving != nodes(legs,N).triangles:
        raise PatchTooSmall( f'the A-side tiling has not reached its asymptotic pattern inside H({N})' , { 'N': N } )
    return dimers

def superimpose(dA,dB):
    """
    Superimpose two dimer configurations of one patch and decompose the union into loops, doubled edges and paths.

    Args:
        dA (DimerConfig): The A side, a matching missing the nodes
        dB (DimerConfig): The B side

    Returns:
        double (DoubleDimerConfig)
    """

    assert dA.patch is dB.patch
    patch = dA.patch

    graph = nx.MultiGraph()
    graph.add_nodes_from( patch.graph.nodes )
    for dimers in ( dA , dB ):
        for edge in dimers.edges: graph.add_edge( *patch.edge_triangles[edge] , edge=edge , side=dimers.side )

    loops , doubled , paths = [] , [] , []
    for component in nx.connected_components(graph):
        ends = sorted( v for v in component if graph.degree(v) == 1 )
        assert all( graph.degree(v) in ( 1 , 2 ) for v in component ) and len(ends) in ( 0 , 2 )

        if ends: paths.append( ( ends[0] , ends[1] , nx.shortest_path( graph , ends[0] , ends[1] ) ) )
        elif len(component) == 2: doubled.append( tuple( sorted(component) ) )
        else: loops.append( sorted(component) )

    return DoubleDimerConfig( patch , graph , loops , doubled , paths )

##################################################################################################################################################################################################################

def stabilization_size(legs,A,B):
    regions = region_sets( LegTriple( *legs[:3] ) )
    extent = sum( ( eta[0] if eta else 0 ) + len(eta) for eta in legs[:3] )
    return STABILIZATION_SCALE * ( len(A) + len(B) + len(regions.ii) + 2*len(regions.iii) + extent ) + STABILIZATION_OFFSET

def double_dimer(legs,A,B,N):
    patch = build_patch(N)
    return superimpose( dimers_from_boxset(patch,'A',legs,A) , dimers_from_boxset(patch,'B',legs,B) )

def _paths_within_sectors(double):
    boundary = double.patch.boundary
    return all( boundary[start].sector == boundary[end].sector for start,end,_ in double.paths )

def ab_membership(legs,A,B,N=None):
    """
    Decide whether a closed pair (A,B) is an AB configuration: every path of the double-dimer configuration D_(A,B)(N)
    joins two nodes of the same sector. The verdict is taken at the stabilisation size and repeated at N+2.

    Args:
        legs (LegTriple or tuple): The asymptotic partitions
        A (frozenset): Boxes of I- u III
        B (frozenset): Boxes of II u III
        N (int): Patch size (defaults to stabilization_size)

    Returns:
        member (bool)
    """

    legs = LegTriple( *legs[:3] )
    if N is None: N = stabilization_size(legs,A,B)

    verdicts = [ _paths_within_sectors( double_dimer(legs,A,B,size_) ) for size_ in ( N , N + 2 ) ]
    if verdicts[0] != verdicts[1]:
        raise Unstable( f'membership changes between H({N}) and H({N+2})' ,
                        { 'legs': [ list(eta) for eta in legs[:3] ] , 'A': sorted(A) , 'B': sorted(B) , 'N': N , 'verdicts': verdicts } )
    return verdicts[0]

def realized_pairing(double):
    return { frozenset( ( start , end ) ) for start,end,_ in double.paths }

def realizes_rainbow_pairing(legs,A,B,N=None):
    """
    Whether the paths of D_(A,B)(N) join exactly the node pairs of the rainbow pairing. For a closed pair this agrees with
    ab_membership: paths are disjoint and join nodes of opposite bipartite class, so within a sector they must nest.
    """

    legs = LegTriple( *legs[:3] )
    if N is None: N = stabilization_size(legs,A,B)
    return realized_pairing( double_dimer(legs,A,B,N) ) == { frozenset(pair) for pair in nodes(legs,N).pairing }

def patch_weight(patch,dimers,n):
    """
    Exponent vector of the edge-weight monomial of a dimer configuration, with colours reduced mod n.
    """

    exps = np.zeros( n , dtype=np.int64 )
    for edge in dimers.edges:
        if edge in patch.edge_weights:
            color , power = patch.edge_weights[edge]
            exps[ color % n ] += power
    return exps

##################################################################################################################################################################################################################

def _find(parent,x):
    while parent.setdefault(x,x) != x: x = parent[x]
    return x

def labelled_box_count(legs,boxes,unlabelled):
    """
    Euler characteristic of the space of labellings of an underlying labelled box configuration.

    The type III boxes of `boxes` outside `unlabelled` carry labels in P^1, where the legs induce three distinct points
    L_0, L_1, L_2. Every rule forces an equality between two labels or between a label and some L_l, so the space is a
    product of P^1's (one per free class of labels) and its Euler characteristic is 2^classes, or 0 when the rules clash.

    Args:
        legs (LegTriple or tuple): The asymptotic partitions
        boxes (frozenset): The underlying boxes, inside I- u II u III
        unlabelled (frozenset): The unlabelled type III boxes

    Returns:
        chi (int)
    """

    legs = LegTriple( *legs[:3] )
    regions = region_sets(legs)
    boxes = set(boxes)
    labelled = ( boxes & set(regions.iii) ) - set(unlabelled)

    def kind(w):
        if w in regions.iii: return ( 'III' , None )
        for i in range(3):
            if w in regions.ii_hat[i]: return ( 'II' , i )
        membership = cyl_membership(legs,w)
        if '-' in membership: return ( 'I-' , membership.index('-') )
        return ( None , None )

    parent = {}
    def union(x,y): parent[ _find(parent,x) ] = _find(parent,y)

    window = set(boxes)
    for box in boxes: window.update( _successors(box) )

    for w in window:
        present = [ p for p in _predecessors(w) if p in boxes ]
        w_kind , index = kind(w)

        if w not in boxes:
            if not present or w_kind is None: continue
            if w_kind in ( 'I-' , 'III' ): return 0
            for p in present: # an absent II_i box tolerates only predecessors labelled L_i
                if p not in labelled: return 0
                union( p , ( 'L' , index ) )

        elif w in labelled:
            for p in present:
                p_kind , p_index = kind(p)
                if p_kind == 'I-': union( w , ( 'L' , p_index ) )
                elif p in labelled: union(w,p)
                else: return 0

    roots = {}
    for x in list(parent) + list(labelled):
        root = _find(parent,x)
        roots.setdefault( root , set() ).add(x)

    free = 0
    for members in roots.values():
        constants = { x for x in members if isinstance(x,tuple) and x[0] == 'L' }
        if len(constants) > 1: return 0
        if not constants and members & labelled: free += 1
    return 2**free

def membership_agreement(legs,budget):
    """
    Compare the double-dimer membership test with the labelled box configurations: for every underlying configuration
    (A u B, A & B) reached by closed pairs with |A|+|B| <= budget, the number of member pairs must equal the Euler
    characteristic of its labellings.

    Returns:
        witness (dict or None): The first disagreement, or None
    """

    legs = LegTriple( *legs[:3] )
    members , shapes = {} , []
    for A,B in enumerate_ab_all(legs,budget):
        shape = ( A | B , A & B )
        if shape not in members:
            members[shape] = 0
            shapes.append(shape)
        members[shape] += int( ab_membership(legs,A,B) )

    for boxes,unlabelled in shapes:
        chi = labelled_box_count(legs,boxes,unlabelled)
        if chi != members[ ( boxes , unlabelled ) ]:
            return { 'legs': [ list(eta) for eta in legs[:3] ] , 'boxes': sorted(boxes) , 'unlabelled': sorted(unlabelled) ,
                     'members': members[ ( boxes , unlabelled ) ] , 'euler_characteristic': chi }
    return None

##################################################################################################################################################################################################################

def _position(v):
    return np.array( [ v[0] - 0.5*v[1] - 0.5*v[2] , np.sqrt(3)/2 * ( v[1] - v[2] ) ] )

def _center(triangle):
    return np.mean( [ _position(v) for v in _triangle_vertices(triangle) ] , axis=0 )

def plot_double_dimer(double,path,node_set=None):
    """
    Write an SVG of a double-dimer configuration: A dimers, B dimers and paths coloured by the sector of their start.

    Args:
        double (DoubleDimerConfig): The configuration
        path (str): Output file
        node_set (NodeSet): If given, the nodes are drawn in their colours

    Returns:
        None
    """

    import matplotlib
    matplotlib.use('Agg')
    import matplotlib.pyplot as plt

    fig , ax = plt.subplots( figsize=(8,8) )
    for u,v in double.patch.graph.edges:
        ( x0 , y0 ) , ( x1 , y1 ) = _center(u) , _center(v)
        ax.plot( [x0,x1] , [y0,y1] , color='lightgray' , linewidth=0.5 )

    for u,v,data in double.graph.edges(data=True):
        ( x0 , y0 ) , ( x1 , y1 ) = _center(u) , _center(v)
        ax.plot( [x0,x1] , [y0,y1] , color='black' if data['side'] == 'A' else 'gray' , linewidth=1.0 )

    for start,_,vertices in double.paths:
        sector = double.patch.boundary[start].sector
        xy = np.array( [ _center(v) for v in vertices ] )
        ax.plot( xy[:,0] , xy[:,1] , color=SECTOR_COLORS[sector][0] , linewidth=2.5 , alpha=0.6 )

    if node_set is not None:
        for triangle in node_set.triangles:
            x , y = _center(triangle)
            ax.scatter( [x] , [y] , color=node_set.colors[triangle] , s=12 , zorder=3 )

    ax.set_aspect('equal')
    ax.axis('off')
    fig.savefig( path , format='svg' )
    plt.close(fig)
