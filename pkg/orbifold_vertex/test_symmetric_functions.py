import pytest

from series import vars_q, monomial
from symmetric_functions import q_bullet_exponents, q_bullet, skew_schur_spec, hook_series_H, loop_schur, loop_schur_ssyt


def test_q_bullet():
    'q_t is the ladder product q_1...q_t, or its inverse run below zero'
    assert list( q_bullet_exponents(0,3) ) == [ 0 , 0 , 0 ]
    assert list( q_bullet_exponents(-2,3) ) == [ -1 , 0 , -1 ]
    assert list( q_bullet_exponents(2,2) ) == [ 1 , 1 ]
    assert list( q_bullet_exponents(3,2) ) == [ 1 , 2 ]
    assert q_bullet(1,2) == monomial( vars_q(2) , [0,1] )

def test_skew_schur_one_variable():
    'with n = 1 the alphabet is 1, q, q^2, ...'
    s = skew_schur_spec( (1,) , () , () , 1 , 3 )
    assert [ s.coefficient( (k,) ) for k in range(4) ] == [ 1 , 1 , 1 , 1 ]

    s = skew_schur_spec( (1,1) , () , () , 1 , 3 )
    assert [ s.coefficient( (k,) ) for k in range(4) ] == [ 0 , 1 , 1 , 2 ]

    s = skew_schur_spec( (2,) , () , () , 1 , 3 )
    assert [ s.coefficient( (k,) ) for k in range(4) ] == [ 1 , 1 , 2 , 2 ]

def test_skew_schur_stripping():
    'stripping a box leaves the smaller shape, and a non-contained inner shape gives zero'
    assert skew_schur_spec( (1,) , (1,) , () , 2 , 3 ).terms == { (0,0): 1 }
    assert skew_schur_spec( (2,) , (1,) , () , 2 , 3 ) == skew_schur_spec( (1,) , () , () , 2 , 3 )
    assert skew_schur_spec( (1,) , (2,) , () , 1 , 3 ).terms == {}

def test_hook_series():
    'H_nu multiplies 1/(1 - q^hook) over the cells'
    assert hook_series_H( () , 2 , 3 ).terms == { (0,0): 1 }
    assert hook_series_H( (1,) , 2 , 2 ).terms == { (0,0): 1 , (1,0): 1 , (2,0): 1 }

    H = hook_series_H( (2,1) , 2 , 3 )
    assert H.coefficient( (0,1) ) == 2 and H.coefficient( (0,2) ) == 3 and H.coefficient( (1,2) ) == 1

@pytest.mark.parametrize( 'nu,n' , [ ( () , 1 ) , ( (1,) , 2 ) , ( (2,) , 2 ) , ( (1,1) , 2 ) , ( (2,1) , 1 ) , ( (2,1) , 3 ) , ( (2,2) , 2 ) ] )
def test_loop_schur_against_tableaux(nu,n):
    'the hook product form agrees with the tableau sum'
    assert loop_schur(nu,n,5).agrees_with( loop_schur_ssyt(nu,n,5) , 5 )

def test_loop_schur_examples():
    'the loop Schur function of a column starts at 1 and of a row at q_{-1}'
    assert loop_schur( (1,) , 2 , 2 ).terms == { (0,0): 1 , (1,0): 1 , (2,0): 1 }
    assert loop_schur( (1,1) , 2 , 1 ).terms == { (0,0): 1 , (0,1): 1 }
    assert loop_schur( (2,) , 2 , 1 ).terms == { (0,1): 1 }
