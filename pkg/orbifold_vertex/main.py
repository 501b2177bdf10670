import sys
import json
import time
import argparse

import numpy as np

from partitions import parse_partition, partitions_up_to, check_partition_lemmas
from regions import LegTriple
from dt_vertex import dt_vertex, dt_symmetry_check
from pt_vertex import pt_vertex_enum, pt_vertex_closed, pt_vertex_dt_ratio, pt_symmetry_check, triangulate, default_jobs
from double_dimer import double_dimer, stabilization_size, nodes, plot_double_dimer, membership_agreement
from symmetric_functions import hook_series_H, loop_schur, skew_schur_spec
from weights import K_symmetry_check, check_all_weight_lemmas
from condensation import vacuum_check, recurrence_check, correspondence_check
from glue import load_diagram, pt_partition
from errors import OrbifoldVertexError, RecurrenceViolated, LemmaViolated


PT_METHODS = { 'enum': pt_vertex_enum , 'closed': pt_vertex_closed , 'dt-ratio': pt_vertex_dt_ratio }
CHECKS = ( 'recurrence' , 'correspondence' , 'weights' , 'vacuum' , 'symmetry' , 'partition-lemmas' , 'membership' )


def parse_legs(text):
    """
    Parse the "lam;mu;nu" leg syntax, e.g. "1;1;1,1". An empty segment is the empty partition.

    Args:
        text (str): Three semicolon-separated partitions

    Returns:
        legs (tuple[tuple[int]]): (lam, mu, nu)
    """

    segments = text.split(';')
    if len(segments) != 3: raise argparse.ArgumentTypeError(f'"{text}" needs exactly three ";"-separated partitions')
    try: return tuple( parse_partition(segment) for segment in segments )
    except ValueError as error: raise argparse.ArgumentTypeError( str(error) )

def random_legs(samples,max_size=2,rng=np.random):
    """
    Draw leg triples uniformly from the partitions of size <= max_size, from the numpy global seed unless a RandomState
    is given.
    """

    shapes = list( partitions_up_to(max_size) )
    return [ tuple( shapes[ rng.randint( len(shapes) ) ] for _ in range(3) ) for _ in range(samples) ]

def _shown(legs):
    return [ list(eta) for eta in legs[:3] ]

##################################################################################################################################################################################################################
# Output

def _text(value,indent=0):
    if isinstance(value,dict):
        width = max( [ len( str(key) ) for key in value ] + [ 0 ] )
        lines = []
        for key,item in value.items():
            if isinstance(item,( dict , list )) and len(item) > 0 and isinstance( item if isinstance(item,dict) else item[0] , ( dict , list ) ):
                lines.append( ' '*indent + f'{key}:' )
                lines.append( _text( item , indent + 2 ) )
            else:
                lines.append( ' '*indent + f'{str(key).ljust(width)}  {json.dumps(item) if isinstance(item,( dict , list )) else item}' )
        return '\n'.join(lines)
    if isinstance(value,list): return '\n'.join( _text(item,indent) if isinstance(item,dict) else ' '*indent + json.dumps(item) for item in value )
    return ' '*indent + str(value)

def emit_series(series,config):
    if config['output']['format'] == 'text': print( series.to_text() )
    else: print( series.to_json() )

def emit_report(report,config,stream=None):
    stream = stream or sys.stdout
    if config['output']['format'] == 'text': print( _text(report) , file=stream )
    else: print( json.dumps(report) , file=stream )

def _progress(config,message,start_time):
    if config['output']['verbose']: print( f'{message}\t{round( time.time() - start_time , 2 )} seconds' , file=sys.stderr )

##################################################################################################################################################################################################################
# Subcommands

def run_vertex(config):
    """
    Compute a DT or PT vertex and print it as a series.

    Args:
        config (dict): A dictionary specifying parameter configurations; uses config['vertex'] and config['output']

    Returns:
        exit_code (int): 0, or 1 when a triangulation finds disagreeing methods
    """

    vertex = config['vertex']
    n , legs , D , verbose = vertex['n'] , vertex['legs'] , vertex['degree'] , config['output']['verbose']

    start_time = time.time()
    if vertex['side'] == 'dt':
        emit_series( dt_vertex(n,legs,D) , config )
        _progress( config , f'dt vertex at {_shown(legs)}' , start_time )
        return 0

    if vertex['method'] == 'triangulate':
        result = triangulate(n,legs,D,config['jobs'],verbose)
        report = { 'legs': _shown(legs) , 'n': n , 'degree': D , 'methods': list( result['series'] ) ,
                   'agree': len( result['mismatches'] ) == 0 , 'mismatches': result['mismatches'] ,
                   'series': { method: series.to_dict() for method,series in result['series'].items() } }
        emit_report(report,config)
        return 0 if report['agree'] else 1

    if vertex['method'] == 'enum': W = pt_vertex_enum(n,legs,D,config['jobs'],verbose)
    else: W = PT_METHODS[ vertex['method'] ]( n , legs , D , force=vertex['force'] )
    emit_series(W,config)
    _progress( config , f'pt vertex ({vertex["method"]}) at {_shown(legs)}' , start_time )

    if config['output']['plot'] is not None and vertex['method'] == 'enum':
        triple = LegTriple( *legs , n )
        N = stabilization_size( triple , frozenset() , frozenset() )
        plot_double_dimer( double_dimer( triple , frozenset() , frozenset() , N ) , config['output']['plot'] , nodes(triple,N) )
    return 0

def _symmetry_suite(config):
    check = config['check']
    n , D = check['n'] , check['degree']
    legs_list = [ check['legs'] ] if check['legs'] is not None else random_legs( check['samples'] )

    failures = []
    for legs in legs_list:
        start_time = time.time()
        results = { 'dt': dt_symmetry_check(n,legs,D) , 'pt': pt_symmetry_check(n,legs,D) }
        if len( legs[0] ) > 0 and len( legs[2] ) > 0: results['K'] = K_symmetry_check(legs,n)
        failures.extend( { 'legs': _shown(legs) , 'n': n , 'symmetry': name } for name,holds in results.items() if not holds )
        _progress( config , f'symmetry at {_shown(legs)}' , start_time )

    return { 'check': 'symmetry' , 'n': n , 'degree': D , 'triples': len(legs_list) , 'holds': len(failures) == 0 , 'failures': failures }

def _weights_suite(config):
    check = config['check']
    start_time = time.time()
    failures = check_all_weight_lemmas( check['max_size'] , check['n'] )
    _progress( config , 'weight lemmas' , start_time )

    for legs in random_legs( check['samples'] ):
        if len( legs[0] ) > 0 and len( legs[2] ) > 0 and not K_symmetry_check( legs , check['n'] ):
            failures.append( { 'legs': _shown(legs) , 'n': check['n'] , 'identity': 'K2/K3 bar-transpose' } )

    return { 'check': 'weights' , 'n': check['n'] , 'max_size': check['max_size'] , 'holds': len(failures) == 0 , 'failures': failures }

def _membership_suite(config):
    check = config['check']
    legs_list = [ check['legs'] ] if check['legs'] is not None else [ ( lam , mu , nu ) for lam in partitions_up_to(1) for mu in partitions_up_to(1) for nu in partitions_up_to(1) ]

    failures = []
    for legs in legs_list:
        start_time = time.time()
        witness = membership_agreement( legs , check['degree'] )
        if witness is not None: failures.append(witness)
        _progress( config , f'membership at {_shown(legs)}' , start_time )

    return { 'check': 'membership' , 'budget': check['degree'] , 'triples': len(legs_list) , 'holds': len(failures) == 0 , 'failures': failures }

def run_check(config):
    """
    Run one verification suite and print its report; a failing suite prints its witness.

    Args:
        config (dict): A dictionary specifying parameter configurations; uses config['check'] and config['output']

    Returns:
        exit_code (int): 0 if the check holds, 1 otherwise
    """

    check = config['check']
    kind , n , D , verbose = check['kind'] , check['n'] , check['degree'] , config['output']['verbose']

    if kind == 'recurrence':
        try: report = { 'check': kind , **recurrence_check( check['which'] , check['side'] , check['legs'] , n , D , config['jobs'] , verbose ) }
        except RecurrenceViolated as error: report = { 'check': kind , 'holds': False , 'witness': error.witness }

    elif kind == 'correspondence':
        report = { 'check': kind , **correspondence_check( check['legs'] , n , D , config['jobs'] , verbose ) }

    elif kind == 'vacuum':
        start_time = time.time()
        report = { 'check': kind , **vacuum_check(n,D) }
        _progress( config , f'vacuum at n={n}' , start_time )

    elif kind == 'weights':
        try: report = _weights_suite(config)
        except LemmaViolated as error: report = { 'check': kind , 'holds': False , 'witness': error.witness }

    elif kind == 'symmetry': report = _symmetry_suite(config)

    elif kind == 'partition-lemmas':
        failures = check_partition_lemmas( check['max_size'] )
        report = { 'check': kind , 'max_size': check['max_size'] , 'holds': len(failures) == 0 , 'failures': failures }

    else: report = _membership_suite(config)

    emit_report(report,config)
    return 0 if report['holds'] else 1

def run_symfun(config):
    """
    Print the hook product H_nu, the loop Schur function or the specialised skew Schur function s_{xi/eta}(q_{.-nu}).
    """

    symfun = config['symfun']
    n , nu , D = symfun['n'] , symfun['nu'] , symfun['degree']

    if symfun['kind'] == 'hook': emit_series( hook_series_H(nu,n,D) , config )
    elif symfun['kind'] == 'loop-schur': emit_series( loop_schur(nu,n,D) , config )
    else: emit_series( skew_schur_spec( symfun['xi'] , symfun['eta'] , nu , n , D ) , config )
    return 0

def run_glue(config):
    """
    Load a web diagram and print its PT partition function.
    """

    glue = config['glue']
    start_time = time.time()
    diagram = load_diagram( glue['diagram'] )
    emit_series( pt_partition( diagram , glue['curve_degree'] , glue['box_degree'] , config['jobs'] , config['output']['verbose'] ) , config )
    _progress( config , f'glue {glue["diagram"]}' , start_time )
    return 0

SUBCOMMANDS = { 'vertex': run_vertex , 'check': run_check , 'symfun': run_symfun , 'glue': run_glue }

def run(config):
    """
    Dispatch a configuration to its subcommand.

    Args:
        config (dict): A dictionary specifying parameter configurations

    Returns:
        exit_code (int): 0 on success or a passing check, 1 on a failing check, 2 on invalid input
    """

    np.random.seed( config['seed'] )
    try: return SUBCOMMANDS[ config['command'] ](config)
    except OrbifoldVertexError as error:
        print( f'error: {error}' , file=sys.stderr )
        emit_report( { 'error': type(error).__name__ , 'message': str(error) , 'witness': error.witness } , config , sys.stderr )
        return 2
    except OSError as error:
        print( f'error: {error}' , file=sys.stderr )
        return 2

##################################################################################################################################################################################################################
# Command line

def build_parser():
    parser = argparse.ArgumentParser( prog='orbifold_vertex' , description='Orbifold DT/PT topological vertices: computation, verification and gluing.' )
    parser.add_argument( '--format' , choices=( 'json' , 'text' ) , default='json' )
    parser.add_argument( '--verbose' , action='store_true' , help='print progress and timings to stderr' )
    parser.add_argument( '--seed' , type=int , default=1 , help='seed for the randomised suites' )
    parser.add_argument( '--jobs' , type=int , default=default_jobs() , help='worker processes (default: $ORBIFOLD_VERTEX_JOBS or the core count)' )
    commands = parser.add_subparsers( dest='command' , required=True )

    vertex = commands.add_parser( 'vertex' , help='compute V^n or W^n' )
    vertex.add_argument( 'side' , choices=( 'dt' , 'pt' ) )
    vertex.add_argument( '--n' , type=int , default=1 )
    vertex.add_argument( '--legs' , type=parse_legs , default=( () , () , () ) )
    vertex.add_argument( '--degree' , type=int , required=True )
    vertex.add_argument( '--method' , choices=( 'enum' , 'closed' , 'dt-ratio' , 'triangulate' ) , default='enum' )
    vertex.add_argument( '--plot' , default=None , help='write the double-dimer SVG of the base configuration (pt, enum)' )
    vertex.add_argument( '--force' , action='store_true' , help='evaluate closed or dt-ratio outside its validity domain' )

    check = commands.add_parser( 'check' , help='run a verification suite' )
    check.add_argument( 'kind' , choices=CHECKS )
    check.add_argument( '--n' , type=int , default=1 )
    check.add_argument( '--legs' , type=parse_legs , default=None )
    check.add_argument( '--degree' , type=int , default=4 )
    check.add_argument( '--which' , type=int , choices=( 1 , 2 , 3 ) , default=1 )
    check.add_argument( '--side' , type=str.upper , choices=( 'DT' , 'PT' ) , default='DT' )
    check.add_argument( '--max-size' , type=int , default=8 )
    check.add_argument( '--samples' , type=int , default=10 )

    symfun = commands.add_parser( 'symfun' , help='symmetric-function series' )
    symfun.add_argument( 'kind' , choices=( 'hook' , 'loop-schur' , 'skew' ) )
    symfun.add_argument( '--n' , type=int , default=1 )
    symfun.add_argument( '--nu' , type=parse_partition , default=() )
    symfun.add_argument( '--xi' , type=parse_partition , default=() )
    symfun.add_argument( '--eta' , type=parse_partition , default=() )
    symfun.add_argument( '--degree' , type=int , required=True )

    glue = commands.add_parser( 'glue' , help='PT partition function of a web diagram' )
    glue.add_argument( '--diagram' , required=True )
    glue.add_argument( '--curve-degree' , type=int , required=True )
    glue.add_argument( '--box-degree' , type=int , required=True )

    return parser

def config_from_args(args,parser=None):
    """
    Convert parsed command-line arguments into the nested config dict taken by run().

    Args:
        args (argparse.Namespace): The parsed arguments
        parser (argparse.ArgumentParser): Used to report usage errors that argparse cannot detect itself

    Returns:
        config (dict)
    """

    config = { 'command': args.command , 'seed': args.seed , 'jobs': max( 1 , args.jobs ) ,
               'output': { 'format': args.format , 'verbose': args.verbose , 'plot': getattr( args , 'plot' , None ) } }

    if args.command == 'vertex':
        config['vertex'] = { 'side': args.side , 'n': args.n , 'legs': args.legs , 'degree': args.degree , 'method': args.method ,
                             'force': args.force }
    elif args.command == 'check':
        config['check'] = { 'kind': args.kind , 'which': args.which , 'side': args.side , 'n': args.n , 'legs': args.legs ,
                            'degree': args.degree , 'max_size': args.max_size , 'samples': args.samples }
        if args.kind in ( 'recurrence' , 'correspondence' ) and args.legs is None and parser is not None: parser.error(f'check {args.kind} needs --legs')
    elif args.command == 'symfun':
        config['symfun'] = { 'kind': args.kind , 'n': args.n , 'xi': args.xi , 'eta': args.eta , 'nu': args.nu , 'degree': args.degree }
    else:
        config['glue'] = { 'diagram': args.diagram , 'curve_degree': args.curve_degree , 'box_degree': args.box_degree }

    n = getattr( args , 'n' , 1 )
    if n < 1 and parser is not None: parser.error('--n must be at least 1')
    return config

def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    return run( config_from_args(args,parser) )

if __name__ == '__main__':
    if len( sys.argv ) > 1: sys.exit( main() )

    config = { 'command': 'vertex',
               'vertex': { 'side': 'dt', # 'dt' for V^n, 'pt' for W^n
                           'n': 1, # the colour modulus of the Z_n action
                           'legs': ( () , () , () ), # the asymptotic partitions (lam, mu, nu)
                           'degree': 4, # the series is exact to this total degree
                           'method': 'enum', # pt only: 'enum', 'closed', 'dt-ratio' or 'triangulate'
                           'force': False }, # evaluate closed or dt-ratio outside its validity domain
               'output': { 'format': 'text', # 'json' or 'text'
                           'verbose': True, # print progress to stderr
                           'plot': None }, # path of the double-dimer SVG, pt enum only
               'jobs': default_jobs(), # worker processes for the enumerations
               'seed': 1
               }

    sys.exit( run(config) )
