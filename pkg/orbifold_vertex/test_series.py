import pytest

from series import LaurentSeries, vars_q, monomial, constant, zero, invert_unit, bar_involution, sign_twist, embed, collapse, \
                   macmahon, from_json
from errors import VarTableMismatch, NotAUnit, NonConvergent


Q1 = vars_q(1)
Q2 = vars_q(2)
Q3 = vars_q(3)

def series(variables,terms,trunc):
    return LaurentSeries( variables , terms , trunc )

def test_monomial_and_constant():
    'monomials and constants carry the infinite truncation sentinel'
    assert monomial( Q1 , [1] ).terms == { (1,): 1 }
    assert constant( Q2 , 3 ).terms == { (0,0): 3 }
    assert monomial( Q2 , [-1,2] , -1 ).terms == { (-1,2): -1 }
    with pytest.raises(VarTableMismatch): monomial( Q2 , [1] )

def test_arithmetic():
    'products keep exactly the terms below the smaller truncation'
    q = monomial( Q1 , [1] )
    one = constant( Q1 , 1 )
    assert ( ( one + q ) * ( one - q ) ).truncate(4).terms == { (0,): 1 , (2,): -1 }
    assert ( monomial( Q2 , [-1,0] ) * monomial( Q2 , [1,0] ) ).terms == { (0,0): 1 }

    f = series( Q1 , { (0,): 1 , (1,): 2 , (2,): 3 } , 2 )
    assert ( f * one ).terms == f.terms
    assert ( f * q ).trunc == 3
    assert ( f * f ).terms == { (0,): 1 , (1,): 4 , (2,): 10 }
    with pytest.raises(VarTableMismatch): f + constant( Q2 , 1 )

def test_invert_unit():
    'inverses multiply back to 1 up to the truncation'
    q = monomial( Q1 , [1] )
    assert invert_unit( constant( Q1 , 1 ) - q , 3 ).terms == { (0,): 1 , (1,): 1 , (2,): 1 , (3,): 1 }

    f = monomial( Q2 , [-1,0] ) * ( constant( Q2 , 1 ) + monomial( Q2 , [0,1] ) )
    g = invert_unit(f,4)
    assert ( f * g ).truncate(3).terms == { (0,0): 1 }

    h = constant( Q2 , 1 ) + monomial( Q2 , [1,0] ) + monomial( Q2 , [0,1] )
    inverse = invert_unit(h,2)
    assert inverse.coefficient( (1,0) ) == -1 and inverse.coefficient( (1,1) ) == 2

    with pytest.raises(NotAUnit): invert_unit( zero(Q1) , 2 )
    with pytest.raises(NotAUnit): invert_unit( constant( Q1 , 2 ) + q , 2 )

def test_bar_involution():
    'the bar involution swaps q_k and q_{-k}'
    f = series( Q2 , { (1,0): 1 , (0,2): 5 } , 4 )
    assert bar_involution(f,2) == f
    assert bar_involution( monomial( Q3 , [0,1,0] ) , 3 ).terms == { (0,0,1): 1 }
    g = series( Q3 , { (1,2,0): 1 , (0,1,1): -2 } , 3 )
    assert bar_involution( bar_involution(g,3) , 3 ) == g
    with pytest.raises(VarTableMismatch): bar_involution( f , 3 )

def test_sign_twist():
    'sign twists multiply each coefficient by the signs raised to its exponents'
    f = series( Q2 , { (1,0): 1 , (-1,1): 1 , (2,0): 1 } , 2 )
    assert sign_twist( f , {} ) == f
    assert sign_twist( f , { 'q_0': -1 } ).terms == { (1,0): -1 , (-1,1): -1 , (2,0): 1 }

def test_embed_and_collapse():
    'renaming into a larger table adds the exponents of merged variables'
    f = series( Q2 , { (1,0): 1 , (0,1): 1 } , 2 )
    assert collapse(f).terms == { (1,): 2 }
    g = embed( f , ( 'x' , 'y' , 'z' ) , { 'q_0': 'z' , 'q_1': 'x' } )
    assert g.terms == { (0,0,1): 1 , (1,0,0): 1 }

def test_macmahon():
    'M(1,q) counts plane partitions'
    one , q = constant( Q1 , 1 ) , monomial( Q1 , [1] )
    M = macmahon(one,q,5)
    assert [ M.coefficient( (k,) ) for k in range(6) ] == [ 1 , 1 , 3 , 6 , 13 , 24 ]

    v = monomial( ( 'v' , 'q' ) , [1,0] )
    assert macmahon( v , monomial( ( 'v' , 'q' ) , [0,1] ) , 3 ).coefficient( (1,1) ) == 1

    shifted = macmahon( monomial( Q2 , [0,-1] ) , monomial( Q2 , [1,1] ) , 2 )
    assert shifted.coefficient( (1,0) ) == 1 and shifted.coefficient( (0,1) ) == 0
    with pytest.raises(NonConvergent): macmahon( monomial( Q1 , [-1] ) , q , 3 )

def test_first_mismatch():
    'comparisons report the first differing coefficient'
    f = series( Q1 , { (0,): 1 , (2,): 3 } , 3 )
    g = series( Q1 , { (0,): 1 , (2,): 4 } , 5 )
    assert f.first_mismatch(g) == { 'exponents': [2] , 'left': '3' , 'right': '4' , 'trunc': 3 }
    assert f.agrees_with(g,1)

def test_serialisation():
    'series JSON lists sorted terms with decimal-string coefficients'
    f = series( Q2 , { (1,0): 2 , (-1,1): -1 } , 3 )
    assert f.to_dict() == { 'vars': [ 'q_0' , 'q_1' ] , 'trunc': 3 , 'floor': 0 ,
                            'terms': [ { 'e': [-1,1] , 'c': '-1' } , { 'e': [1,0] , 'c': '2' } ] }
    assert from_json( f.to_json() ) == f
    assert series( Q1 , { (0,): 1 , (1,): 2 } , 2 ).to_text() == '1 + 2*q_0 + O(3)'
    assert ( constant( Q1 , 1 ) - monomial( Q1 , [1] ) ).to_text() == '1 - q_0'
