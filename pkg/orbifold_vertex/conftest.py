import pytest


def _edge(id_,tail=None,head=None,**extra):
    return { 'id': id_ , 'tail': tail , 'head': head , **extra }

@pytest.fixture
def single_vertex_diagram():
    """
    One trivalent vertex with three non-compact edges.
    """

    return { 'vertices': [ { 'id': 'v' , 'edges': [ 'x' , 'y' , 'z' ] } ] ,
             'edges': [ _edge('x','v') , _edge('y','v') , _edge('z','v') ] }

@pytest.fixture
def orbifold_vertex_diagram():
    """
    One vertex whose third edge carries a Z_2 action.
    """

    return { 'vertices': [ { 'id': 'v' , 'edges': [ 'x' , 'y' , 'z' ] } ] ,
             'edges': [ _edge('x','v') , _edge('y','v') , _edge('z','v',n=2) ] }

@pytest.fixture
def conifold_diagram():
    """
    The resolved conifold: two vertices joined by a compact edge e with (m,m') = (-1,-1) and no delta flags.
    """

    return { 'vertices': [ { 'id': 'A' , 'edges': [ 'a1' , 'a2' , 'e' ] } , { 'id': 'B' , 'edges': [ 'b1' , 'b2' , 'e' ] } ] ,
             'edges': [ _edge('a1','A') , _edge('a2','A') ,
                        _edge( 'e' , 'A' , 'B' , compact=True , n=1 , m=-1 , mp=-1 , adj={ 'f': 'a1' , 'fp': 'a2' , 'g': 'b1' , 'gp': 'b2' } ) ,
                        _edge('b1','B') , _edge('b2','B') ] }
