import numpy as np
import pytest

from regions import LegTriple, series_floor
from main import random_legs
from pt_vertex import pt_vertex_enum, pt_vertex_closed, pt_vertex_dt_ratio, pt_symmetry_check, triangulate, closed_formula_valid, \
                      default_jobs
from errors import OutOfValidity


def coefficients(series,low,high):
    return [ series.coefficient( (k,) ) for k in range( low , high + 1 ) ]

def test_empty_vertex():
    'W with no legs is 1'
    assert pt_vertex_enum( 1 , ( () , () , () ) , 3 ).terms == { (0,): 1 }
    assert pt_vertex_enum( 2 , ( () , () , () ) , 2 ).terms == { (0,0): 1 }

def test_single_leg_enumeration():
    'one leg contributes the prefixes of its negative column'
    assert coefficients( pt_vertex_enum( 1 , ( () , () , (1,) ) , 3 ) , 0 , 3 ) == [ 1 , 1 , 1 , 1 ]

    W = pt_vertex_enum( 2 , ( (1,) , () , () ) , 4 )
    assert W.terms == { (0,0): 1 , (0,1): 1 , (1,1): 1 , (1,2): 1 , (2,2): 1 }

def test_two_leg_enumeration():
    'W(1,1,0) = q^-1 + 1/(1-q)^2'
    W = pt_vertex_enum( 1 , ( (1,) , (1,) , () ) , 2 )
    assert W.floor == -1
    assert coefficients( W , -1 , 2 ) == [ 1 , 1 , 2 , 3 ]

def test_closed_formula():
    'the closed formula reproduces the hand values'
    assert coefficients( pt_vertex_closed( 1 , ( () , () , (1,) ) , 3 ) , 0 , 3 ) == [ 1 , 1 , 1 , 1 ]
    assert coefficients( pt_vertex_closed( 1 , ( (1,) , (1,) , () ) , 3 ) , -1 , 3 ) == [ 1 , 1 , 2 , 3 , 4 ]
    assert pt_vertex_closed( 2 , ( () , () , (1,) ) , 2 ).terms == { (0,0): 1 , (1,0): 1 , (2,0): 1 }

def test_closed_formula_validity():
    'outside its validity domain the closed formula refuses to evaluate'
    assert closed_formula_valid( 2 , ( () , () , (1,) ) )
    assert closed_formula_valid( 2 , ( (1,) , () , (1,1) ) )
    assert not closed_formula_valid( 2 , ( (1,) , () , (1,) ) )
    with pytest.raises(OutOfValidity): pt_vertex_closed( 2 , ( (1,) , () , (1,) ) , 2 )

def test_dt_ratio():
    'V/V_empty is (1+2q+5q^2)/(1+q+3q^2) for one leg'
    assert coefficients( pt_vertex_dt_ratio( 1 , ( (1,) , () , () ) , 2 ) , 0 , 2 ) == [ 1 , 1 , 1 ]
    with pytest.raises(OutOfValidity): pt_vertex_dt_ratio( 2 , ( () , () , (1,) ) , 2 )

def test_dt_ratio_negative_control():
    'for a non multi-regular leg the DT ratio is not the PT vertex'
    forced = pt_vertex_dt_ratio( 2 , ( () , () , (1,) ) , 3 , force=True )
    assert not forced.agrees_with( pt_vertex_enum( 2 , ( () , () , (1,) ) , 3 ) , 3 )

@pytest.mark.parametrize( 'n,legs,D' , [ ( 1 , ( () , () , () ) , 3 ) , ( 2 , ( (1,) , () , () ) , 4 ) ] )
def test_pt_symmetry(n,legs,D):
    'W(lam,mu,nu) is the bar of W(mu\',lam\',nu\')'
    assert pt_symmetry_check(n,legs,D)

@pytest.mark.slow
def test_pt_symmetry_three_colours():
    'the bar-transpose symmetry holds for n = 3 with two legs'
    assert pt_symmetry_check( 3 , ( (1,) , (1,) , () ) , 3 )

@pytest.mark.parametrize( 'n,legs,D' , [ ( 1 , ( (1,) , (1,) , () ) , 2 ) , ( 1 , ( (1,) , () , () ) , 3 ) , ( 2 , ( () , () , (1,) ) , 3 ) ] )
def test_triangulation(n,legs,D):
    'enumeration, closed formula and DT ratio agree wherever they apply'
    report = triangulate(n,legs,D)
    assert report['mismatches'] == {}
    assert 'closed' in report['series']

@pytest.mark.slow
@pytest.mark.parametrize( 'n,legs,D' , [ ( 2 , ( () , () , (1,1) ) , 3 ) , ( 1 , ( (1,) , (1,) , () ) , 3 ) , ( 2 , ( (1,) , (1,) , (1,1) ) , 3 ) ] )
def test_triangulation_slow(n,legs,D):
    'the three methods agree on multi-regular legs'
    report = triangulate(n,legs,D)
    assert report['mismatches'] == {}
    assert set( report['series'] ) == { 'enum' , 'closed' , 'dt-ratio' }

def test_default_jobs(monkeypatch):
    'the worker count comes from ORBIFOLD_VERTEX_JOBS'
    monkeypatch.setenv( 'ORBIFOLD_VERTEX_JOBS' , '3' )
    assert default_jobs() == 3

@pytest.mark.slow
@pytest.mark.parametrize( 'n,legs' , [ ( n , legs ) for n in ( 1 , 2 , 3 ) for legs in random_legs( 10 , rng=np.random.RandomState(n) ) ] )
def test_pt_symmetry_random(n,legs):
    'the bar-transpose symmetry holds two degrees above the floor for seeded random legs'
    assert pt_symmetry_check( n , legs , series_floor( LegTriple( *legs , n ) ) + 2 )
