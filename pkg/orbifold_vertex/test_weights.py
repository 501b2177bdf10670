import numpy as np
import pytest

from weights import K_exponents, K_monomial, recurrence_K, K_symmetry_check, varpi, vartheta, varpi1, bar, weight_lemma_check, lemma_ids, \
                    admissible_N, check_all_weight_lemmas, SUBLEMMAS, QUOTIENTS
from errors import EmptyPartition, LemmaViolated


def test_K1():
    'K_1 for lam = mu = (1) is q^-1, or q_0^-1 for n = 2'
    assert list( K_exponents( 1 , ( (1,) , (1,) , () ) , 1 ) ) == [ -1 ]
    assert list( K_exponents( 1 , ( (1,) , (1,) , (2,1) ) , 1 ) ) == [ -1 ]
    assert list( K_exponents( 1 , ( (1,) , (1,) , () ) , 2 ) ) == [ -1 , 0 ]
    assert K_monomial( 1 , ( (1,) , (1,) , () ) , 1 ).terms == { (-1,): 1 }

def test_K2():
    'K_2 for lam = nu = (1) is q^-1'
    assert list( K_exponents( 2 , ( (1,) , () , (1,) ) , 1 ) ) == [ -1 ]

@pytest.mark.parametrize( 'which,legs,n,expected' , [ ( 1 , ( (2,) , (1,) , () ) , 1 , [ -1 ] ) , ( 1 , ( (1,1) , (1,) , () ) , 1 , [ -2 ] ) ,
                                                   ( 1 , ( (1,) , (2,) , () ) , 1 , [ -2 ] ) , ( 1 , ( (2,1) , (2,1) , () ) , 1 , [ -3 ] ) ,
                                                   ( 2 , ( (1,1) , () , (2,) ) , 2 , [ -1 , 0 ] ) , ( 2 , ( (1,) , () , (1,) ) , 2 , [ -1 , 0 ] ) ] )
def test_recurrence_K(which,legs,n,expected):
    'the recurrence monomial reads the legs in the cylinder convention'
    assert list( recurrence_K(which,legs,n) ) == expected

def test_K_needs_the_modified_legs():
    'each K needs the two partitions its recurrence modifies'
    with pytest.raises(EmptyPartition): K_exponents( 1 , ( () , (1,) , () ) , 1 )
    with pytest.raises(EmptyPartition): K_exponents( 2 , ( (1,) , (1,) , () ) , 1 )
    with pytest.raises(EmptyPartition): K_exponents( 3 , ( (1,) , () , (1,) ) , 1 )

def test_K_symmetry_examples():
    'q^K_2(lam,mu,nu) is the bar of q^K_3(mu\',lam\',nu\')'
    assert K_symmetry_check( ( (1,) , () , (1,) ) , 2 )
    assert K_symmetry_check( ( (2,1) , (1,) , (2,) ) , 3 )

def test_K_symmetry_random():
    'the bar-transpose symmetry holds on random leg triples'
    np.random.seed(1)
    shapes = [ (1,) , (2,) , (1,1) , (2,1) , (3,) , (2,2) , (1,1,1) ]
    for _ in range(20):
        lam , mu , nu = ( shapes[ np.random.randint( len(shapes) ) ] for _ in range(3) )
        for n in ( 1 , 2 , 3 ):
            assert K_symmetry_check( ( lam , mu , nu ) , n )

def test_factors_vanish_on_empty_ranges():
    'the weight factors are 1 when their products are empty'
    assert varpi( 1 , ( 0 , 0 , 0 ) , 2 ).terms == { (0,0): 1 }
    assert varpi( 2 , ( () , 4 , 1 ) , 3 ).terms == { (0,0,0): 1 }
    assert vartheta( 5 , ( () , 4 , 1 ) , 2 ).terms == { (0,0): 1 }

def test_varpi1_quadratic_growth():
    'with n = 1 varpi1(m,0,0) is m(m+1)^2/2'
    for m in range(6): assert list( varpi1(m,0,0,1) ) == [ m*(m+1)**2 // 2 ]

def test_bar():
    'bar reverses the non-zero colours'
    assert list( bar( np.array( [ 1 , 2 , 3 ] ) ) ) == [ 1 , 3 , 2 ]

def test_lemma_registry():
    'every sub-lemma and every composite quotient is registered'
    ids = lemma_ids()
    assert len(ids) == len( set(ids) ) == len(SUBLEMMAS) + len(QUOTIENTS)
    assert { 'dt1-K' , 'dt2-K' , 'dt3-K' , 'pt1-K' , 'pt2-K' , 'pt3-K' } <= set(QUOTIENTS)
    assert admissible_N( [ (3,1) ] ) == 6

def test_dt1_varpi1_lemma():
    'the varpi1 quotient of the first DT recurrence holds for N = 3..6'
    assert weight_lemma_check( 'dt1-varpi1' , () , range(3,7) , 1 )['checked'] == 4
    assert weight_lemma_check( 'dt1-varpi1' , () , range(3,7) , 2 )['checked'] == 4

def test_dt1_varpi2_lemma():
    'the varpi2 quotient of the first DT recurrence holds for eta = (3,1) at N = 5'
    assert weight_lemma_check( 'dt1-varpi2' , (3,1) , [5] , 1 )['checked'] == 1

def test_pt1_vartheta1_lemma():
    'the vartheta1 quotient of the first PT recurrence holds for eta = (2,2) at N = 6'
    assert weight_lemma_check( 'pt1-vartheta1' , (2,2) , [6] , 1 )['checked'] == 1

def test_linear_and_quadratic_lemmas():
    'the second differences in N of varpi1 and varpi3 match their closed forms'
    assert weight_lemma_check( 'dt1-varpi3' , (2,1) , range(5,9) , 3 )['checked'] == 4
    assert weight_lemma_check( 'dt2-varpi1' , () , range(3,7) , 1 )['checked'] == 4
    assert weight_lemma_check( 'dt3-varpi1' , () , range(3,7) , 1 )['checked'] == 4

def test_nonempty_lemmas_reject_empty():
    'lemmas about eta^r and eta^c need a non-empty eta'
    with pytest.raises(EmptyPartition): weight_lemma_check( 'dt1-varpi2' , () , [4] , 1 )

def test_violation_carries_witness(monkeypatch):
    'a failing identity reports both sides'
    monkeypatch.setitem( SUBLEMMAS , 'dt1-varpi1' , SUBLEMMAS['dt1-varpi1']._replace( rhs=lambda eta,N,n: np.zeros( n , dtype=np.int64 ) ) )
    with pytest.raises(LemmaViolated) as raised: weight_lemma_check( 'dt1-varpi1' , () , [ 3 ] , 1 )
    witness = raised.value.witness
    assert witness['lemma'] == 'dt1-varpi1' and witness['N'] == 3
    assert witness['quotient'] == [ 8 ] and witness['closed_form'] == [ 0 ]

@pytest.mark.slow
@pytest.mark.parametrize( 'n' , [ 1 , 2 , 3 ] )
def test_all_weight_lemmas(n):
    'every quotient identity holds for |eta| <= 8 and every K quotient is N-independent'
    assert check_all_weight_lemmas(8,n) == []
