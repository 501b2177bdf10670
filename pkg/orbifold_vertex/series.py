import json
from math import comb, inf

import numpy as np

from errors import VarTableMismatch, NotAUnit, NonConvergent


def vars_q(n):
    """
    The standard variable table q_0,...,q_{n-1} of a Z_n-vertex.
    """

    return tuple( f'q_{l}' for l in range(n) )

def _degree(exps):
    return sum(exps)


class LaurentSeries:
    """
    Sparse multivariate Laurent series with integer coefficients, exact up to a total-degree truncation.
    """

    def __init__(self,variables,terms=None,trunc=inf,floor=None):
        """
        Constructor method for the LaurentSeries class.

        Args:
            variables (tuple[str]): The variable table; exponent vectors are indexed in this order
            terms (dict): Map from exponent tuple to integer coefficient
            trunc (int or math.inf): Coefficients are exact for total degree <= trunc and absent above
            floor (int): Lower bound on the total degree of any term (defaults to the lowest stored degree)

        Attributes:
            variables (tuple[str]): The variable table
            terms (dict{tuple[int]: int}): Non-zero coefficients keyed by exponent vector
            trunc (int or math.inf): Truncation order
            floor (int): Lower bound on term degrees
        """

        self.variables = tuple(variables)
        self.trunc = trunc
        self.terms = {}

        for exps,coeff in ( {} if terms is None else terms ).items():
            exps = tuple( int(e) for e in exps )
            if len(exps) != len(self.variables): raise VarTableMismatch(f'exponent vector {exps} does not match {self.variables}')
            if coeff != 0 and _degree(exps) <= trunc: self.terms[exps] = int(coeff)

        lowest = min( ( _degree(exps) for exps in self.terms ) , default=None )
        if floor is None: floor = lowest if lowest is not None else ( 0 if trunc == inf else trunc )
        self.floor = floor if lowest is None else min(floor,lowest)

    ##############################################################################################################################################################################################################

    def _check_vars(self,other):
        if self.variables != other.variables: raise VarTableMismatch(f'{self.variables} != {other.variables}')

    def __add__(self,other):
        if isinstance(other,int): other = constant(self.variables,other)
        self._check_vars(other)

        terms = dict(self.terms)
        for exps,coeff in other.terms.items(): terms[exps] = terms.get(exps,0) + coeff
        return LaurentSeries( self.variables , terms , min(self.trunc,other.trunc) , min(self.floor,other.floor) )

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries( self.variables , { exps: -coeff for exps,coeff in self.terms.items() } , self.trunc , self.floor )

    def __sub__(self,other):
        if isinstance(other,int): other = constant(self.variables,other)
        return self + (-other)

    def __rsub__(self,other):
        return (-self) + other

    def __mul__(self,other):
        if isinstance(other,int): return LaurentSeries( self.variables , { e: c*other for e,c in self.terms.items() } , self.trunc , self.floor )
        self._check_vars(other)

        # a term of degree a known up to trunc_f only meets terms of other of degree >= floor_g
        trunc = min( self.trunc + other.floor , other.trunc + self.floor )
        terms = {}
        other_items = [ ( exps , coeff , _degree(exps) ) for exps,coeff in other.terms.items() ]
        for exps_f,coeff_f in self.terms.items():
            degree_f = _degree(exps_f)
            for exps_g,coeff_g,degree_g in other_items:
                if degree_f + degree_g > trunc: continue
                exps = tuple( a + b for a,b in zip(exps_f,exps_g) )
                terms[exps] = terms.get(exps,0) + coeff_f * coeff_g

        return LaurentSeries( self.variables , terms , trunc , self.floor + other.floor )

    __rmul__ = __mul__

    def __pow__(self,k):
        base = self if k >= 0 else invert_unit(self)
        result = constant( self.variables , 1 )
        for _ in range( abs(k) ): result = result * base
        return result

    def __eq__(self,other):
        return isinstance(other,LaurentSeries) and self.variables == other.variables and self.terms == other.terms and self.trunc == other.trunc

    def __repr__(self):
        return f'LaurentSeries({self.to_text()!r})'

    ##############################################################################################################################################################################################################

    def truncate(self,trunc):
        return LaurentSeries( self.variables , self.terms , min(trunc,self.trunc) , self.floor )

    def coefficient(self,exps):
        return self.terms.get( tuple(exps) , 0 )

    def degree_coefficients(self):
        """
        Coefficient sums per total degree, from floor to trunc. Used for the n=1 style comparisons.

        Args: None

        Returns:
            coefficients (dict{int: int}): total degree -> sum of coefficients of that degree
        """

        coefficients = {}
        for exps,coeff in self.terms.items(): coefficients[ _degree(exps) ] = coefficients.get( _degree(exps) , 0 ) + coeff
        return coefficients

    def is_monomial(self):
        return len(self.terms) == 1

    def first_mismatch(self,other,trunc=None):
        """
        Compare two series coefficientwise up to a common truncation.

        Args:
            other (LaurentSeries): The series to compare against
            trunc (int): Degree up to which to compare (defaults to the smaller of the two truncations)

        Returns:
            witness (dict or None): None if they agree, otherwise the first (lexicographically) differing coefficient
        """

        self._check_vars(other)
        if trunc is None: trunc = min(self.trunc,other.trunc)

        for exps in sorted( set(self.terms) | set(other.terms) ):
            if _degree(exps) > trunc: continue
            if self.coefficient(exps) != other.coefficient(exps):
                return { 'exponents': list(exps) , 'left': str( self.coefficient(exps) ) , 'right': str( other.coefficient(exps) ) , 'trunc': trunc }
        return None

    def agrees_with(self,other,trunc=None):
        return self.first_mismatch(other,trunc) is None

    ##############################################################################################################################################################################################################

    def to_dict(self):
        return { 'vars': list(self.variables) ,
                 'trunc': None if self.trunc == inf else int(self.trunc) ,
                 'floor': int(self.floor) ,
                 'terms': [ { 'e': list(exps) , 'c': str(self.terms[exps]) } for exps in sorted(self.terms) ] }

    def to_json(self):
        return json.dumps( self.to_dict() )

    def to_text(self):
        """
        Human-readable form, terms ordered by total degree then lexicographically, e.g. "1 + 2*q_0*q_1^-1 + O(3)".
        """

        pieces = []
        for exps in sorted( self.terms , key=lambda e: ( _degree(e) , e ) ):
            factors = [ name if e == 1 else f'{name}^{e}' for name,e in zip(self.variables,exps) if e != 0 ]
            coeff = self.terms[exps]
            if len(factors) == 0: pieces.append( str(coeff) )
            elif coeff == 1: pieces.append( '*'.join(factors) )
            elif coeff == -1: pieces.append( '-' + '*'.join(factors) )
            else: pieces.append( f'{coeff}*' + '*'.join(factors) )

        text = ' + '.join(pieces).replace('+ -','- ') if len(pieces) > 0 else '0'
        return text if self.trunc == inf else f'{text} + O({self.trunc + 1})'


def from_dict(data):
    trunc = inf if data['trunc'] is None else data['trunc']
    return LaurentSeries( data['vars'] , { tuple( term['e'] ): int( term['c'] ) for term in data['terms'] } , trunc , data['floor'] )

def from_json(text):
    return from_dict( json.loads(text) )

##################################################################################################################################################################################################################

def monomial(variables,exps,coeff=1):
    """
    Single-term series with the +infinity truncation sentinel.

    Args:
        variables (tuple[str]): The variable table
        exps (sequence[int]): One exponent per variable
        coeff (int): The coefficient

    Returns:
        f (LaurentSeries)
    """

    if len(exps) != len(variables): raise VarTableMismatch(f'{len(exps)} exponents for {len(variables)} variables')
    return LaurentSeries( variables , { tuple(exps): coeff } )

def constant(variables,value,trunc=inf):
    return LaurentSeries( variables , { (0,)*len(variables): value } , trunc , 0 )

def zero(variables,trunc=inf):
    return LaurentSeries( variables , {} , trunc , 0 if trunc == inf else trunc )

def add(f,g):
    return f + g

def multiply(f,g):
    return f * g

def invert_unit(f,trunc=None):
    """
    Invert a series whose lowest-degree stratum is a single monomial with coefficient +1 or -1.

    Args:
        f (LaurentSeries): The unit
        trunc (int): Requested truncation; required when f is a polynomial with the infinite sentinel

    Returns:
        g (LaurentSeries): A series with f*g = 1 up to the returned truncation
    """

    if len(f.terms) == 0: raise NotAUnit('the zero series is not invertible')

    lowest = min( _degree(exps) for exps in f.terms )
    leading = [ exps for exps in f.terms if _degree(exps) == lowest ]
    if len(leading) != 1 or abs( f.terms[ leading[0] ] ) != 1:
        raise NotAUnit( f'lowest stratum {[ ( list(e) , f.terms[e] ) for e in leading ]} is not a single +-monomial' )

    lead_exps , lead_coeff = leading[0] , f.terms[ leading[0] ]
    target = f.trunc - 2*lowest
    if trunc is not None: target = min(target,trunc)
    if target == inf: raise NotAUnit('inverting a polynomial needs an explicit truncation')

    inverse_lead = monomial( f.variables , [ -e for e in lead_exps ] , lead_coeff )
    h = ( f * inverse_lead - 1 ).truncate( target + lowest ) # 1 + h with h of positive degree
    h = LaurentSeries( h.variables , h.terms , target + lowest , 1 )

    total = constant( f.variables , 1 , target + lowest )
    power = constant( f.variables , 1 , target + lowest )
    while len(power.terms) > 0:
        power = ( -h * power ).truncate( target + lowest )
        total = total + power

    return ( total * inverse_lead ).truncate(target)

def bar_involution(f,n):
    """
    Exchange q_k and q_{-k} (indices mod n).

    Args:
        f (LaurentSeries): A series in exactly the variables q_0,...,q_{n-1}
        n (int): The colour modulus

    Returns:
        f_bar (LaurentSeries)
    """

    if f.variables != vars_q(n): raise VarTableMismatch(f'bar involution needs variables {vars_q(n)}, got {f.variables}')

    permutation = np.array( [ (-k) % n for k in range(n) ] )
    terms = { tuple( int(e) for e in np.array(exps)[permutation] ): coeff for exps,coeff in f.terms.items() }
    return LaurentSeries( f.variables , terms , f.trunc , f.floor )

def sign_twist(f,rule):
    """
    Replace each variable x by sign(x)*x.

    Args:
        f (LaurentSeries): The series to twist
        rule (dict{str: int}): Variable name -> +1 or -1; unnamed variables keep sign +1

    Returns:
        f_twisted (LaurentSeries)
    """

    negated = np.array( [ rule.get(name,1) == -1 for name in f.variables ] , dtype=bool )
    terms = {}
    for exps,coeff in f.terms.items():
        flips = int( np.sum( np.array(exps)[negated] ) ) if negated.any() else 0
        terms[exps] = -coeff if flips % 2 else coeff

    return LaurentSeries( f.variables , terms , f.trunc , f.floor )

def embed(f,variables,mapping):
    """
    Rename variables of f into a (possibly larger) variable table. Several old variables may map to the same new one,
    in which case their exponents add.

    Args:
        f (LaurentSeries): The series to move
        variables (tuple[str]): The target variable table
        mapping (dict{str: str}): Old name -> new name; every old variable with a non-zero exponent must be mapped

    Returns:
        g (LaurentSeries)
    """

    position = { name: index for index,name in enumerate(variables) }
    targets = [ position[ mapping[name] ] if name in mapping else None for name in f.variables ]

    terms = {}
    for exps,coeff in f.terms.items():
        new_exps = [0] * len(variables)
        for target,e in zip(targets,exps):
            if e == 0: continue
            if target is None: raise VarTableMismatch(f'no image for a variable of {f.variables}')
            new_exps[target] += e
        new_exps = tuple(new_exps)
        terms[new_exps] = terms.get(new_exps,0) + coeff

    return LaurentSeries( variables , terms , f.trunc , f.floor )

def collapse(f,name='q'):
    """
    Set every variable equal to a single variable, e.g. all q_l -> q.
    """

    return embed( f , (name,) , { old: name for old in f.variables } )

def macmahon(v,q,D):
    """
    Expand M(v,q) = prod_{m>=1} (1 - v q^m)^(-m) exactly to total degree D.

    Args:
        v (LaurentSeries): A monomial
        q (LaurentSeries): A monomial in the same variables
        D (int): Truncation order

    Returns:
        M (LaurentSeries)
    """

    if not ( v.is_monomial() and q.is_monomial() ): raise NonConvergent('MacMahon factors must be monomials')

    ( v_exps , v_coeff ), = v.terms.items()
    ( q_exps , q_coeff ), = q.terms.items()
    if _degree(q_exps) < 1 or _degree(v_exps) + _degree(q_exps) < 1:
        raise NonConvergent(f'v*q^m must have positive degree for every m>=1 (deg v={_degree(v_exps)}, deg q={_degree(q_exps)})')

    variables = v.variables
    result = constant( variables , 1 , D )
    m = 1
    while _degree(v_exps) + m*_degree(q_exps) <= D:
        x_exps = tuple( a + m*b for a,b in zip(v_exps,q_exps) )
        x_coeff = v_coeff * q_coeff**m
        x_degree = _degree(x_exps)

        factor = { tuple( k*e for e in x_exps ): comb( k + m - 1 , k ) * x_coeff**k for k in range( D // x_degree + 1 ) }
        result = result * LaurentSeries( variables , factor , D , 0 )
        m += 1

    return result
