from fractions import Fraction

import numpy as np
import pytest

from partitions import parse_partition, format_partition, conjugate, partitions_of, partitions_up_to, maya_diagram, \
                       partition_from_maya, MayaDiagram, diag_stats, derive, colored_count, color_counts, is_multi_regular, \
                       hook_color_profile, A_stat, C_stat, check_partition_lemmas
from errors import EmptyPartition, CellOutOfShape


H = Fraction(1,2)

def test_parse_partition():
    'the text syntax is comma-separated parts, the empty string is the empty partition'
    assert parse_partition('3,1') == (3,1)
    assert parse_partition('') == ()
    assert format_partition( (3,3,2) ) == '3,3,2'
    for bad in ( '1,3' , '0' , '2,-1' ):
        with pytest.raises(ValueError): parse_partition(bad)

def test_conjugate():
    'conjugation transposes the cell diagram'
    assert conjugate( () ) == ()
    assert conjugate( (3,1) ) == (2,1,1)
    assert conjugate( (2,2) ) == (2,2)
    for eta in partitions_up_to(7): assert conjugate( conjugate(eta) ) == eta

def test_partition_counts():
    'partitions_of yields p(k) shapes in reverse-lexicographic order'
    assert list( partitions_of(4) ) == [ (4,) , (3,1) , (2,2) , (2,1,1) , (1,1,1,1) ]
    assert [ len( list( partitions_of(k) ) ) for k in range(9) ] == [ 1 , 1 , 2 , 3 , 5 , 7 , 11 , 15 , 22 ]

def test_maya_diagram():
    'Maya diagrams record the positive elements and the negative gaps'
    assert maya_diagram( () ) == MayaDiagram( frozenset() , frozenset() , 0 )
    assert maya_diagram( (2,1) ) == MayaDiagram( frozenset( { 3*H } ) , frozenset( { -3*H } ) , 0 )
    assert maya_diagram( (1,) ) == MayaDiagram( frozenset( { H } ) , frozenset( { -H } ) , 0 )

def test_partition_from_maya():
    'partition_from_maya inverts maya_diagram and reads off the charge'
    assert partition_from_maya( MayaDiagram( frozenset() , frozenset() , 0 ) ) == ( () , 0 )
    assert partition_from_maya( MayaDiagram( frozenset( { 3*H } ) , frozenset( { -3*H } ) , 0 ) ) == ( (2,1) , 0 )
    assert partition_from_maya( MayaDiagram( frozenset( { H , 3*H } ) , frozenset() , 2 ) ) == ( () , 2 )
    for eta in partitions_up_to(6):
        for charge in ( -2 , 0 , 1 ):
            assert partition_from_maya( maya_diagram(eta,charge) ) == ( eta , charge )

def test_diag_stats():
    'd(eta) = max{i : eta_i >= i} and d~(eta) = max{i : eta_i >= d}'
    assert diag_stats( (1,) ) == (1,1)
    assert diag_stats( (3,3,2) ) == (2,3)
    assert diag_stats( (3,1) ) == (1,2)
    with pytest.raises(EmptyPartition): diag_stats( () )

def test_derive_examples():
    'eta^r, eta^c and eta^rc agree between the Maya definition and the closed form'
    assert derive( (1,) , 'r' ) == ()
    assert derive( (3,1) , 'r' ) == (1,)
    assert derive( (3,1) , 'c' ) == (2,)
    assert derive( (3,1) , 'rc' ) == ()
    assert derive( (2,2) , 'r' ) == (3,)
    assert derive( (2,2) , 'c' ) == (1,1,1)
    assert derive( (2,2) , 'rc' ) == (2,1)
    assert derive( (3,3,2) , 'rc' ) == (3,1,1)
    with pytest.raises(EmptyPartition): derive( () , 'r' )
    with pytest.raises(ValueError): derive( (1,) , 'x' )

def test_colors():
    'cells are coloured i-j, -j or i mod n depending on their role'
    assert colored_count( (3,1) , 2 , 'edge_or_leg3' , 0 ) == 2
    assert colored_count( (3,1) , 2 , 'edge_or_leg3' , 1 ) == 2
    assert colored_count( () , 3 , 'leg1' , 2 ) == 0
    assert list( color_counts( (1,1) , 2 ) ) == [ 1 , 1 ]
    assert list( color_counts( (2,1) , 3 , 'leg1' ) ) == [ 2 , 0 , 1 ]
    assert list( color_counts( (2,1) , 3 , 'leg2' ) ) == [ 2 , 1 , 0 ]

def test_is_multi_regular():
    'multi-regular partitions have equally many cells of every colour'
    assert is_multi_regular( (1,1) , 2 )
    assert is_multi_regular( (2,2) , 2 )
    assert not is_multi_regular( (1,) , 2 )
    assert is_multi_regular( () , 3 )
    assert all( is_multi_regular(eta,1) for eta in partitions_up_to(5) )

def test_hook_color_profile():
    'hook profiles sum to the classical hook length'
    assert list( hook_color_profile( (1,) , 1 , (0,0) ) ) == [ 1 ]
    assert list( hook_color_profile( (2,1) , 2 , (0,0) ) ) == [ 1 , 2 ]
    assert list( hook_color_profile( (2,1) , 2 , (0,1) ) ) == [ 0 , 1 ]
    assert int( np.sum( hook_color_profile( (4,2,1) , 3 , (0,0) ) ) ) == 6
    with pytest.raises(CellOutOfShape): hook_color_profile( (2,1) , 2 , (1,1) )

def test_A_and_C_statistics():
    'A sums floor((i+k)/n) over cells and C sums -m*i - m\'*j + 1'
    assert A_stat( () , 0 , 2 ) == 0
    assert A_stat( (1,1,1) , 0 , 2 ) == 1
    assert A_stat( (1,1,1) , 1 , 2 ) == 2
    assert A_stat( (2,) , 1 , 2 ) == 0
    assert C_stat( () , 3 , 4 ) == 0
    assert C_stat( (1,) , 5 , -2 ) == 1
    assert C_stat( (2,) , -1 , -1 ) == 3
    assert C_stat( (2,) , -1 , -1 , (1,2) ) == 2

def test_partition_lemmas_small():
    'every r/c/rc identity holds for partitions of size at most 8'
    assert check_partition_lemmas(8) == []

@pytest.mark.slow
def test_partition_lemmas_up_to_14():
    'every r/c/rc identity holds for partitions of size at most 14'
    assert check_partition_lemmas(14) == []
