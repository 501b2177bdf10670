from collections import Counter

from regions import LegTriple, cyl_membership, region_sets, pi_min_colored_volume, series_floor, enumerate_dt, enumerate_ab_all, \
                    is_downward_closed, ab_closed


EMPTY = LegTriple( () , () , () )

def test_cyl_membership():
    'boxes are sorted into the positive and negative halves of the leg cylinders'
    assert cyl_membership( LegTriple( (1,) , () , () ) , (-3,0,0) ) == [ '-' , None , None ]
    assert cyl_membership( LegTriple( (1,) , (1,) , () ) , (0,0,0) ) == [ '+' , '+' , None ]
    assert cyl_membership( EMPTY , (2,-1,5) ) == [ None , None , None ]

def test_region_sets():
    'II and III are the pairwise and triple overlaps of the cylinders'
    regions = region_sets(EMPTY)
    assert regions.iii == frozenset() and regions.ii == frozenset()

    regions = region_sets( LegTriple( (1,) , (1,) , () , 2 ) )
    assert regions.ii_hat[2] == frozenset( { (0,0,0) } ) and regions.iii == frozenset()
    assert list( regions.ii_counts ) == [ 1 , 0 ]

    regions = region_sets( LegTriple( (1,) , (1,) , (1,) ) )
    assert regions.iii == frozenset( { (0,0,0) } ) and regions.ii == frozenset()

def test_pi_min_colored_volume():
    'the minimal configuration has volume -|II|_l - 2|III|_l'
    assert list( pi_min_colored_volume(EMPTY) ) == [ 0 ]
    assert list( pi_min_colored_volume( LegTriple( (1,) , (1,) , () , 2 ) ) ) == [ -1 , 0 ]
    assert list( pi_min_colored_volume( LegTriple( (1,) , (1,) , (1,) ) ) ) == [ -2 ]
    assert series_floor( LegTriple( (1,) , (1,) , (1,) ) ) == -2

def test_enumerate_dt_vacuum():
    'without legs the stream is the plane partitions'
    assert list( enumerate_dt(EMPTY,1) ) == [ frozenset() , frozenset( { (0,0,0) } ) ]
    sizes = Counter( len(extra) for extra in enumerate_dt(EMPTY,3) )
    assert [ sizes[k] for k in range(4) ] == [ 1 , 1 , 3 , 6 ]

def test_enumerate_dt_one_leg():
    'one leg along the first axis gives 1, 2, 5 configurations of 0, 1, 2 extra boxes'
    legs = LegTriple( (1,) , () , () )
    found = list( enumerate_dt(legs,2) )
    sizes = Counter( len(extra) for extra in found )
    assert [ sizes[k] for k in range(3) ] == [ 1 , 2 , 5 ]
    assert len( set(found) ) == len(found)
    assert all( is_downward_closed(legs,extra) for extra in found )

def test_enumerate_ab_all():
    'AB configurations are successor-closed pairs inside I- u III and II u III'
    assert list( enumerate_ab_all(EMPTY,3) ) == [ ( frozenset() , frozenset() ) ]

    one_leg = list( enumerate_ab_all( LegTriple( (1,) , () , () ) , 2 ) )
    assert one_leg == [ ( frozenset() , frozenset() ) , ( frozenset( { (-1,0,0) } ) , frozenset() ) ,
                        ( frozenset( { (-1,0,0) , (-2,0,0) } ) , frozenset() ) ]

    two_legs = LegTriple( (1,) , (1,) , () )
    found = set( enumerate_ab_all(two_legs,1) )
    assert found == { ( frozenset() , frozenset() ) , ( frozenset() , frozenset( { (0,0,0) } ) ) ,
                      ( frozenset( { (-1,0,0) } ) , frozenset() ) , ( frozenset( { (0,-1,0) } ) , frozenset() ) }

def test_ab_closed():
    'a deeper negative box forces the boxes between it and the origin'
    legs = LegTriple( (1,) , () , () )
    assert ab_closed( legs , frozenset( { (-1,0,0) , (-2,0,0) } ) , frozenset() )
    assert not ab_closed( legs , frozenset( { (-2,0,0) } ) , frozenset() )
    assert not ab_closed( legs , frozenset( { (0,0,0) } ) , frozenset() )
