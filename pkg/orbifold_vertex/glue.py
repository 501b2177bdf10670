import json
import sys
import time
from itertools import product
from concurrent.futures import ProcessPoolExecutor

import numpy as np

from partitions import conjugate, color_counts, A_stat, C_stat, partitions_up_to, size
from regions import LegTriple, series_floor
from series import constant, zero, monomial, sign_twist, embed, vars_q
from pt_vertex import triangulate
from errors import InvalidDiagram, MethodsDisagree


class WebDiagram:
    """
    The web diagram of a toric CY 3-orbifold with transverse A_{n-1} singularities: a trivalent planar graph with
    oriented edges. Every vertex lists its edges (e1,e2,e3) counterclockwise; an edge with n_e > 1 is e3 at both ends.
    """

    def __init__(self,vertices,edges):
        """
        Constructor method for the WebDiagram class.

        Args:
            vertices (list[dict]): {'id', 'edges': [e1,e2,e3]}
            edges (list[dict]): {'id', 'tail', 'head', 'compact', 'n', 'm', 'mp', 'adj': {'f','fp','g','gp'}} and optionally
                                'delta': {'0','0p','inf','infp'} to be cross-checked against the derived flags

        Attributes:
            vertices (dict): vertex id -> (e1,e2,e3)
            edges (dict): edge id -> edge record
            edge_order (list): Edge ids in file order; fixes the variable table
        """

        self.vertices = { v['id']: tuple( v['edges'] ) for v in vertices }
        self.edges = { e['id']: dict(e) for e in edges }
        self.edge_order = [ e['id'] for e in edges ]
        for e in self.edges.values():
            e.setdefault( 'n' , 1 )
            e.setdefault( 'm' , 0 )
            e.setdefault( 'mp' , 0 )
            e.setdefault( 'compact' , e.get('tail') is not None and e.get('head') is not None )
    def compact_edges(self):
        return [ e for e in self.edge_order if self.edges[e]['compact'] ]
    def variables(self):
        """
        The variable table: q_{e,k} for every edge, then v_{e,k} for every compact edge.
        """

        qs = [ q_name(e,k) for e in self.edge_order for k in range( self.edges[e]['n'] ) ]
        vs = [ v_name(e,k) for e in self.compact_edges() for k in range( self.edges[e]['n'] ) ]
        return tuple( qs + vs )
    def e3(self,v):
        return self.vertices[v][2]
    def deltas(self,e):
        """
        The flags (delta_0, delta'_0, delta_inf, delta'_inf): delta_0 = 1 iff f_{v0} is labelled e3 at v0, and so on.
        """

        edge = self.edges[e]
        adj = edge.get('adj') or {}
        at_tail = lambda name: int( adj.get(name) is not None and self.e3( edge['tail'] ) == adj[name] )
        at_head = lambda name: int( adj.get(name) is not None and self.e3( edge['head'] ) == adj[name] )
        return at_tail('f') , at_tail('fp') , at_head('g') , at_head('gp')
    def to_dict(self):
        return { 'vertices': [ { 'id': v , 'edges': list(es) } for v,es in self.vertices.items() ] ,
                 'edges': [ dict( self.edges[e] ) for e in self.edge_order ] }

def q_name(e,k): return f'q_{e},{k}'
def v_name(e,k): return f'v_{e},{k}'

def diagram_from_dict(data):
    if not isinstance(data,dict) or 'vertices' not in data or 'edges' not in data:
        raise InvalidDiagram( 'a web diagram needs "vertices" and "edges"' , { 'violations': [ 'missing vertices/edges' ] } )
    return WebDiagram( data['vertices'] , data['edges'] )

def load_diagram(path):
    with open(path) as f: return diagram_from_dict( json.load(f) )

##################################################################################################################################################################################################################

def validate(diagram):
    """
    Check trivalence, the e3 labelling rule, endpoint/adjacency consistency, user-supplied delta flags and the
    Calabi-Yau condition m + m' - delta_0 - delta'_0 - delta_inf - delta'_inf + 2 = 0 on every compact edge.

    Args:
        diagram (WebDiagram)

    Returns:
        report (dict): {'valid', 'vertices', 'edges'}

    Raises:
        InvalidDiagram: Listing every violation
    """

    violations = []
    for v,es in diagram.vertices.items():
        if len(es) != 3 or len( set(es) ) != 3: violations.append( f'vertex {v} is not trivalent' ); continue
        for e in es:
            if e not in diagram.edges: violations.append( f'vertex {v} names unknown edge {e}' )
            elif v not in ( diagram.edges[e].get('tail') , diagram.edges[e].get('head') ): violations.append( f'edge {e} does not end at vertex {v}' )
        if any( e in diagram.edges and diagram.edges[e]['n'] > 1 for e in es[:2] ): violations.append( f'at vertex {v} an edge with n_e > 1 is not labelled e3' )

    for e,edge in diagram.edges.items():
        for end in ( 'tail' , 'head' ):
            w = edge.get(end)
            if w is not None and ( w not in diagram.vertices or e not in diagram.vertices[w] ): violations.append( f'edge {e} has {end} {w} which does not list it' )
        if edge['n'] < 1: violations.append( f'edge {e} has n_e = {edge["n"]}' )
        if not edge['compact']: continue
        if edge.get('tail') is None or edge.get('head') is None: violations.append( f'compact edge {e} needs both endpoints' ); continue

        adj = edge.get('adj') or {}
        for names,end in ( ( ( 'f' , 'fp' ) , 'tail' ) , ( ( 'g' , 'gp' ) , 'head' ) ):
            others = set( diagram.vertices.get( edge[end] , () ) ) - { e }
            if { adj.get(name) for name in names } != others: violations.append( f'edge {e}: {names} must be the other two edges at its {end}' )
        if any( f'edge {e}' in violation for violation in violations ): continue

        deltas = diagram.deltas(e)
        if 'delta' in edge:
            supplied = tuple( int( edge['delta'].get(key,0) ) for key in ( '0' , '0p' , 'inf' , 'infp' ) )
            if supplied != deltas: violations.append( f'edge {e}: supplied delta flags {supplied} differ from the derived {deltas}' )
        if edge['m'] + edge['mp'] - sum(deltas) + 2 != 0: violations.append( f'edge {e} violates the Calabi-Yau condition: {edge["m"]} + {edge["mp"]} - {sum(deltas)} + 2 != 0' )

    if violations: raise InvalidDiagram( f'{len(violations)} violation(s)' , { 'violations': violations } )
    return { 'valid': True , 'vertices': len(diagram.vertices) , 'edges': len(diagram.edges) }

def reverse_edge(diagram,e):
    """
    The same geometry with edge e pointing the other way: the endpoints and the sides D_e, D'_e swap, so (m, m') and the
    adjacency labels are exchanged as f <-> g' and f' <-> g.
    """

    data = diagram.to_dict()
    for edge in data['edges']:
        if edge['id'] != e: continue
        edge['tail'] , edge['head'] = edge['head'] , edge['tail']
        edge['m'] , edge['mp'] = edge['mp'] , edge['m']
        if edge.get('adj'):
            adj = edge['adj']
            edge['adj'] = { 'f': adj['gp'] , 'fp': adj['g'] , 'g': adj['fp'] , 'gp': adj['f'] }
        if 'delta' in edge:
            delta = edge['delta']
            edge['delta'] = { '0': delta.get('infp',0) , '0p': delta.get('inf',0) , 'inf': delta.get('0p',0) , 'infp': delta.get('0',0) }
    return diagram_from_dict(data)

def bar_edge(f,diagram,e):
    """
    Exchange q_{e,k} <-> q_{e,-k} and v_{e,k} <-> v_{e,-k} for a single edge e.
    """

    n = diagram.edges[e]['n']
    mapping = { name: name for name in f.variables }
    for k in range(n):
        mapping[ q_name(e,k) ] = q_name( e , (-k) % n )
        if v_name(e,k) in mapping: mapping[ v_name(e,k) ] = v_name( e , (-k) % n )
    return embed( f , f.variables , mapping )

##################################################################################################################################################################################################################
# Signs

def edge_sign(lam,n,m,delta_0,delta_inf,m_prime=0):
    """
    S^e = sum_k C[k,n](|lam|_{k-1} - |lam|_{k+1}) + |lam|_k (1 + (1 + m + delta_0 + delta_inf)|lam|_{k-1}).
    """

    counts = color_counts(lam,n)
    return int( sum( C_stat( lam , m , m_prime , (k,n) ) * ( counts[ (k-1) % n ] - counts[ (k+1) % n ] )
                     + counts[k] * ( 1 + ( 1 + m + delta_0 + delta_inf ) * counts[ (k-1) % n ] ) for k in range(n) ) )

def vertex_sign(legs,n):
    """
    Xi = sum_k |lam_3|_k (|lam_1|_k + |lam_2|_k + |lam_1|_{k+1} + |lam_2|_{k-1}), with lam_1 coloured by -j, lam_2 by i
    and lam_3 by i-j.
    """

    one , two , three = color_counts(legs[0],n,'leg1') , color_counts(legs[1],n,'leg2') , color_counts(legs[2],n)
    return int( sum( three[k] * ( one[k] + two[k] + one[ (k+1) % n ] + two[ (k-1) % n ] ) for k in range(n) ) )

def sign_shifts(lam_3,n):
    # s~_k = |lam_3|_{k-1} + |lam_3|_{k+1}
    counts = color_counts(lam_3,n)
    return np.array( [ counts[ (k-1) % n ] + counts[ (k+1) % n ] for k in range(n) ] , dtype=np.int64 )

def parity_E(lam,n,m,m_prime,delta_0,delta_inf):
    """
    The edge contribution to the sign parity: |lam|(m + delta_0 + delta_inf) when n = 1, otherwise
    sum_k C[k,n](|lam|_{k-1} - |lam|_{k+1}) + |lam|_k (1 + (1 + m)|lam|_{k-1}); reduced mod 2.
    """

    if n == 1: return ( size(lam) * ( m + delta_0 + delta_inf ) ) % 2
    counts = color_counts(lam,n)
    return int( sum( C_stat( lam , m , m_prime , (k,n) ) * ( counts[ (k-1) % n ] - counts[ (k+1) % n ] )
                     + counts[k] * ( 1 + ( 1 + m ) * counts[ (k-1) % n ] ) for k in range(n) ) ) % 2

def parity_V(lengths,volumes,legs,n):
    """
    The vertex contribution to the sign parity.

    Args:
        lengths (sequence[int]): The coloured lengths l_k of the labelled box configuration
        volumes (sequence[int]): The coloured renormalised volumes ||pi||_k
        legs (tuple): (lam_1, lam_2, lam_3)
        n (int): The colour modulus of e3

    Returns:
        parity (int): l_0 + sum_k (l_k + ||pi||_k)(|lam_3|_{k-1} + |lam_3|_{k+1}) + Xi, mod 2
    """

    shifts = sign_shifts(legs[2],n)
    total = int( lengths[0] ) + int( sum( ( int( lengths[k] ) + int( volumes[k] ) ) * int( shifts[k] ) for k in range(n) ) ) + vertex_sign(legs,n)
    return total % 2

##################################################################################################################################################################################################################
# Factors

def edge_factor(diagram,e,lam):
    """
    The edge term E^e_lam: (-1)^S * prod_k v_{e,k}^{|lam|_k} * q_e^C * bar(q_f^{A_lam})^delta_0 * (q_{f'}^{A_lam'})^delta'_0
                          * (q_g^{A_lam})^delta_inf * bar(q_{g'}^{A_lam'})^delta'_inf.

    Args:
        diagram (WebDiagram)
        e: A compact edge id
        lam (tuple[int]): The partition on e

    Returns:
        E (LaurentSeries): A signed monomial in the diagram variables
    """

    variables = diagram.variables()
    if len(lam) == 0: return constant( variables , 1 )

    edge = diagram.edges[e]
    n , m , m_prime = edge['n'] , edge['m'] , edge['mp']
    delta_0 , delta_0p , delta_inf , delta_infp = diagram.deltas(e)
    position = { name: i for i,name in enumerate(variables) }
    exps = np.zeros( len(variables) , dtype=np.int64 )

    counts = color_counts(lam,n)
    for k in range(n):
        exps[ position[ v_name(e,k) ] ] += counts[k]
        exps[ position[ q_name(e,k) ] ] += C_stat( lam , m , m_prime , (k,n) )

    adj = edge.get('adj') or {}
    for flag,name,shape,barred in ( ( delta_0 , 'f' , lam , True ) , ( delta_0p , 'fp' , conjugate(lam) , False ) ,
                                    ( delta_inf , 'g' , lam , False ) , ( delta_infp , 'gp' , conjugate(lam) , True ) ):
        if not flag: continue
        other = adj[name]
        n_other = diagram.edges[other]['n']
        for k in range(n_other):
            exps[ position[ q_name( other , (-k) % n_other if barred else k ) ] ] += A_stat(shape,k,n_other)

    sign = -1 if edge_sign(lam,n,m,delta_0,delta_inf,m_prime) % 2 else 1
    return monomial( variables , exps , sign )

def vertex_legs(diagram,v,assignment):
    """
    (lam_1, lam_2, lam_3) at v: lam_e for an edge leaving v, lam_e' for an edge entering v, () on non-compact edges.
    """

    legs = []
    for e in diagram.vertices[v]:
        lam = assignment.get( e , () )
        legs.append( lam if diagram.edges[e].get('tail') == v else conjugate(lam) )
    return tuple(legs)

def _pt_series(n,legs,D):
    # the closed formula is preferred where it applies, but only after it agrees with the enumeration
    report = triangulate(n,legs,D)
    if report['mismatches']:
        raise MethodsDisagree( 'the PT vertex methods disagree' , { 'n': n , 'legs': [ list(eta) for eta in legs[:3] ] , 'mismatches': report['mismatches'] } )
    return report['series'].get( 'closed' , report['series']['enum'] )

def vertex_factor(diagram,v,assignment,D):
    """
    (-1)^Xi * W^n_{lam_1 lam_2 lam_3}((-1)^{s~(lam_3)} q_v), with q_v = q_{e3} when e3 leaves v and bar(q_{e3}) otherwise.

    Args:
        diagram (WebDiagram)
        v: A vertex id
        assignment (dict): compact edge id -> partition
        D (int): Truncation order

    Returns:
        factor (LaurentSeries): In the diagram variables
    """

    e3 = diagram.e3(v)
    n = diagram.edges[e3]['n']
    legs = vertex_legs(diagram,v,assignment)
    if all( len(lam) == 0 for lam in legs ): return constant( diagram.variables() , 1 , D )

    W = _pt_series(n,legs,D)
    shifts = sign_shifts(legs[2],n)
    W = sign_twist( W , { name: -1 for name,s in zip( vars_q(n) , shifts ) if s % 2 } )

    outward = diagram.edges[e3].get('tail') == v
    W = embed( W , diagram.variables() , { vars_q(n)[k]: q_name( e3 , k if outward else (-k) % n ) for k in range(n) } )
    return -W if vertex_sign(legs,n) % 2 else W

##################################################################################################################################################################################################################

def edge_assignments(diagram,D_curve):
    """
    Every assignment of partitions to the compact edges with total size <= D_curve.
    """

    compact = diagram.compact_edges()
    shapes = list( partitions_up_to(D_curve) )
    for choice in product( shapes , repeat=len(compact) ):
        if sum( size(lam) for lam in choice ) <= D_curve: yield dict( zip(compact,choice) )

def _assignment_term(args):
    diagram , assignment , D = args
    E = constant( diagram.variables() , 1 )
    for e,lam in assignment.items(): E = E * edge_factor(diagram,e,lam)
    ( exps , _ ), = E.terms.items()
    shift = sum(exps)

    floors = { v: series_floor( LegTriple( *vertex_legs(diagram,v,assignment) , diagram.edges[ diagram.e3(v) ]['n'] ) ) for v in diagram.vertices }
    term = E
    for v in diagram.vertices:
        others = sum( floors[u] for u in diagram.vertices if u != v )
        term = term * vertex_factor( diagram , v , assignment , D - shift - others )
    return term.truncate(D)

def pt_partition(diagram,D_curve,D_box,jobs=1,verbose=False):
    """
    The PT partition function: the sum over edge assignments with sum |lam_e| <= D_curve of prod_e E^e * prod_v vertex
    factors, followed by q_{e,0} -> -q_{e,0} on every edge. Exact to total degree D_box in the diagram variables.

    Args:
        diagram (WebDiagram)
        D_curve (int): Bound on the total size of the edge assignment
        D_box (int): Truncation order
        jobs (int): Worker processes, one assignment per task
        verbose (bool): Print progress to stderr

    Returns:
        PT (LaurentSeries)
    """

    validate(diagram)
    start_time = time.time()
    tasks = [ ( diagram , assignment , D_box ) for assignment in edge_assignments(diagram,D_curve) ]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as executor: terms = list( executor.map( _assignment_term , tasks ) )
    else:
        terms = [ _assignment_term(task) for task in tasks ]

    total = zero( diagram.variables() , D_box )
    for term in terms: total = total + term
    if verbose: print( f'{len(tasks)} edge assignments\t{round( time.time() - start_time , 2 )} seconds' , file=sys.stderr )

    return sign_twist( total , { q_name(e,0): -1 for e in diagram.edge_order } )
