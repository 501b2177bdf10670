from fractions import Fraction

import networkx as nx
import pytest

from regions import LegTriple, enumerate_ab_all, region_sets, box_color_counts
from double_dimer import build_patch, nodes, dimers_from_boxset, superimpose, double_dimer, ab_membership, stabilization_size, \
                         labelled_box_count, membership_agreement, plot_double_dimer, patch_weight, realizes_rainbow_pairing
from errors import PatchTooSmall


EMPTY = LegTriple( () , () , () )
H = Fraction(1,2)

def test_patch_shape():
    'H(N) has 6N^2 triangles, 6N of them on the boundary, and is bipartite'
    patch = build_patch(3)
    assert patch.graph.number_of_nodes() == 54
    assert len( patch.boundary ) == 18
    assert nx.is_bipartite( patch.graph )
    assert sorted( { b.sector for b in patch.boundary.values() } ) == [ 0 , 1 , 2 ]

def test_nodes_without_legs():
    'without legs every boundary triangle is a node, evenly split over the sectors'
    node_set = nodes(EMPTY,4)
    assert len( node_set.triangles ) == 24
    assert [ len(entries) for entries in node_set.by_sector ] == [ 8 , 8 , 8 ]
    assert len( node_set.pairing ) == 12

def test_nodes_exclude_leg_labels():
    'a leg removes the labels of its Maya diagram from its sector'
    node_set = nodes( LegTriple( (1,) , () , () ) , 4 )
    assert { label for label,_ in node_set.by_sector[0] }.isdisjoint( { H , -H } )
    assert len( node_set.by_sector[1] ) == 8

    node_set = nodes( LegTriple( (2,1) , () , () ) , 4 )
    assert { label for label,_ in node_set.by_sector[0] }.isdisjoint( { 3*H , -3*H } )

    with pytest.raises(PatchTooSmall): nodes( LegTriple( (5,) , () , () ) , 2 )

def test_vacuum_double_dimer():
    'the vacuum configuration has no loops and every path stays in its sector'
    double = double_dimer( EMPTY , frozenset() , frozenset() , 4 )
    assert double.loops == []
    assert all( double.patch.boundary[start].sector == double.patch.boundary[end].sector for start,end,_ in double.paths )

def test_identical_sides_double_up():
    'superimposing a matching on itself gives only doubled edges'
    patch = build_patch(3)
    dB = dimers_from_boxset( patch , 'B' , EMPTY , frozenset() )
    double = superimpose(dB,dB)
    assert double.paths == [] and double.loops == []
    assert len( double.doubled ) == 27

def test_base_configuration_paths():
    'the base configuration of two legs has one path per pair of nodes'
    legs = LegTriple( (1,) , (1,) , () )
    N = stabilization_size( legs , frozenset() , frozenset() )
    double = double_dimer( legs , frozenset() , frozenset() , N )
    assert 2*len( double.paths ) == len( nodes(legs,N).triangles )

def test_membership_examples():
    'the base pair and a single type-II box are AB configurations'
    assert ab_membership( EMPTY , frozenset() , frozenset() )
    assert ab_membership( LegTriple( (1,) , (1,) , () ) , frozenset() , frozenset( { (0,0,0) } ) )

def test_labelled_box_count():
    'an unlabelled type-II box has exactly one labelling'
    legs = LegTriple( (1,) , (1,) , () )
    assert labelled_box_count( legs , frozenset( { (0,0,0) } ) , frozenset() ) == 1
    assert labelled_box_count( legs , frozenset() , frozenset() ) == 1

@pytest.mark.parametrize( 'legs,budget' , [ ( ( (1,) , () , () ) , 2 ) , ( ( (1,) , (1,) , () ) , 2 ) ] )
def test_membership_agrees_with_labelled_boxes(legs,budget):
    'the double-dimer test counts the labelled box configurations'
    assert membership_agreement(legs,budget) is None

@pytest.mark.slow
@pytest.mark.parametrize( 'legs' , [ ( (1,) , (1,) , (1,) ) , ( (2,) , (1,) , () ) , ( (1,1) , () , (1,) ) , ( (2,) , (1,1) , (1,) ) ] )
def test_membership_agreement_budget_4(legs):
    'the two membership criteria agree on every pair with |A|+|B| <= 4'
    assert membership_agreement(legs,4) is None

def test_membership_is_stable():
    'membership does not change when the patch grows'
    legs = LegTriple( (1,) , (1,) , (1,) )
    for A,B in enumerate_ab_all(legs,2):
        N = stabilization_size(legs,A,B)
        assert ab_membership(legs,A,B,N) == ab_membership(legs,A,B,N+2)

def test_plot_double_dimer(tmp_path):
    'the debug plot is written as SVG'
    path = tmp_path / 'vacuum.svg'
    plot_double_dimer( double_dimer( EMPTY , frozenset() , frozenset() , 3 ) , str(path) , nodes(EMPTY,3) )
    assert path.read_text().lstrip().startswith('<?xml')

def test_local_move_weight():
    'adding the box (i,j,k) to B multiplies the edge weight by q_{i-j}^-1'
    legs = LegTriple( (1,) , (1,) , () )
    box = frozenset( { (0,0,0) } )
    patch = build_patch( stabilization_size( legs , frozenset() , box ) )
    before = patch_weight( patch , dimers_from_boxset( patch , 'B' , legs , frozenset() ) , 2 )
    after = patch_weight( patch , dimers_from_boxset( patch , 'B' , legs , box ) , 2 )
    assert list( after - before ) == [ -1 , 0 ]

def test_local_move_weight_a_side():
    'adding the box (-1,0,0) to A multiplies the edge weight by q_{-1}^-1'
    legs = LegTriple( (1,) , () , () )
    box = frozenset( { (-1,0,0) } )
    patch = build_patch( stabilization_size( legs , box , frozenset() ) )
    before = patch_weight( patch , dimers_from_boxset( patch , 'A' , legs , frozenset() ) , 2 )
    after = patch_weight( patch , dimers_from_boxset( patch , 'A' , legs , box ) , 2 )
    assert list( after - before ) == [ 0 , -1 ]

@pytest.mark.parametrize( 'legs' , [ ( (1,) , (1,) , () ) , ( (1,) , () , (1,) ) , ( (1,) , (1,) , (1,) ) , ( (2,) , (1,) , () ) ] )
def test_weight_bookkeeping(legs):
    'q^w(A,B) q^(|A|+|B|) equals q^w_base q^(|II|+2|III|) for every closed pair'
    n = 2
    legs = LegTriple( *legs , n )
    regions = region_sets(legs)
    full = ( frozenset(regions.iii) , frozenset( regions.ii | regions.iii ) )
    pairs = list( enumerate_ab_all(legs,2) )
    patch = build_patch( max( stabilization_size(legs,A,B) for A,B in pairs + [ full ] ) )

    def weight(A,B):
        return patch_weight( patch , dimers_from_boxset(patch,'A',legs,A) , n ) + patch_weight( patch , dimers_from_boxset(patch,'B',legs,B) , n )

    expected = list( weight(*full) + regions.ii_counts + 2*regions.iii_counts )
    assert any( len(A) > 0 for A,_ in pairs ) and any( len(B) > 0 for _,B in pairs )
    for A,B in pairs:
        assert list( weight(A,B) + box_color_counts(A,n) + box_color_counts(B,n) ) == expected

def test_vacuum_realizes_rainbow_pairing():
    'the vacuum paths join the j-th node of each sector to the j-th from its other end'
    assert realizes_rainbow_pairing( EMPTY , frozenset() , frozenset() , 4 )

@pytest.mark.parametrize( 'legs' , [ ( (1,) , (1,) , () ) , ( (1,) , () , (1,) ) ] )
def test_members_realize_rainbow_pairing(legs):
    'a closed pair realizes the rainbow pairing exactly when it passes the membership test'
    legs = LegTriple(*legs)
    verdicts = []
    for A,B in enumerate_ab_all(legs,2):
        N = stabilization_size(legs,A,B)
        member = ab_membership(legs,A,B,N)
        assert realizes_rainbow_pairing(legs,A,B,N) == member
        verdicts.append(member)
    assert any(verdicts)
