import json
from io import StringIO

from numpy.testing import assert_equal

from parahorics.cli import run, make_parser

def run_cli(*argv):
    out, err = StringIO(), StringIO()
    status = run(list(argv), stdout=out, stderr=err)
    return status, out.getvalue(), err.getvalue()

def run_json(*argv):
    status, out, err = run_cli(*(argv + ('--format', 'json')))
    assert_equal(status, 0)
    return json.loads(out)

def test_hyperspecial():
    data = run_json('hyperspecial', '--max-rank', '8')
    counts = dict((row['type'], row['hyperspecial']) for row in data)
    assert_equal([counts[t] for t in ['A3', 'B5', 'C2', 'D6', 'E6', 'E7', 'E8', 'F4', 'G2']],
                 [4, 2, 2, 4, 3, 2, 1, 1, 1])
    status, out, _ = run_cli('hyperspecial', '--max-rank', '2')
    assert_equal(status, 0)
    assert out.splitlines()[0].split() == ['type', 'vertices', 'hyperspecial']

def test_dimension():
    data = run_json('dimension', 'A1', '--genus', '2', '--theta', '1/2')
    assert_equal((data['moduli_dim'], data['rep_space_dim'], data['residue']), (4, 11, 0))
    data = run_json('dimension', 'A2', '--genus', '2', '--theta', '1/3,1/3', '--mu-nu')
    assert_equal(data['moduli_dim'], 11)
    assert_equal([row['mu'] for row in data['mu_nu']], [2, 2])

    status, out, _ = run_cli('dimension', 'A1', '--genus', '2', '--format', 'tsv')
    assert_equal(status, 0)
    rows = dict(line.split('\t') for line in out.splitlines()[1:])
    assert_equal(rows['moduli_dim'], '3')

def test_roots_and_alcove():
    data = run_json('roots', 'G2')
    assert_equal(len(data['roots']), 12)
    assert_equal(data['marks'], [3, 2])
    data = run_json('alcove', 'C2')
    assert_equal([v['theta'] for v in data['vertices']],
                 [['0', '0'], ['1/2', '0'], ['0', '1']])
    assert_equal([v['hyperspecial'] for v in data['vertices']], [True, False, True])

def test_parahoric_and_localtype():
    data = run_json('parahoric', 'A2', '--theta', '0,1/2')
    assert_equal(data['closed_fiber_parabolic'], [0])
    assert_equal(data['facet_dimension'], 1)
    data = run_json('localtype', 'A1', '--theta', '1/2')
    assert_equal((data['d'], data['delta_coroot_coords']), (4, [1]))
    assert_equal(data['root_group_action'], [2, 2])
    data = run_json('localtype', 'A2', '--d', '3', '--delta', '1,1')
    assert_equal(data['weight'], ['1/3', '1/3'])

def test_hecke_and_pardeg():
    data = run_json('hecke', 'A2', '--lower', '1/3,1/3', '--upper', '0,0')
    assert_equal(data['fiber_dim'], 3)
    data = run_json('pardeg', '--deg', '-1', '--weights', '1/3,1/4')
    assert_equal(data['pardeg'], '-5/12')

def test_usage_errors():
    status, out, err = run_cli('dimension', 'A1', '--genus', '2', '--theta', '0.5')
    assert_equal(status, 2)
    assert_equal(out, '')
    assert 'argument --theta' in err
    assert_equal(run_cli('roots', 'H3')[0], 2)
    assert_equal(run_cli('roots', 'A2', '--bogus')[0], 2)
    assert_equal(run_cli('parahoric', 'A2', '--theta', '1/2')[0], 2)
    assert_equal(run_cli('localtype', 'A2', '--d', '3')[0], 2)
    status, _, err = run_cli('hyperspecial', '--max-rank', '0')
    assert_equal(status, 2)
    assert '--max-rank' in err
    assert_equal(run_cli('hyperspecial', '--max-rank', 'two')[0], 2)
    status, _, err = run_cli()
    assert_equal(status, 2)
    assert 'usage:' in err

def test_help_goes_to_stdout():
    status, out, err = run_cli('pardeg', '--help')
    assert_equal(status, 0)
    assert '--weights' in out
    assert_equal(err, '')

def test_domain_errors():
    status, out, err = run_cli('hecke', 'A2', '--lower', '0,0', '--upper', '1/3,1/3')
    assert_equal(status, 1)
    assert_equal(out, '')
    assert 'does not contain' in err
    assert '--lower' in err and '--upper' in err
    status, _, err = run_cli('dimension', 'A1', '--genus', '-1')
    assert_equal(status, 1)
    assert '--genus' in err
    status, _, err = run_cli('pardeg', '--deg', '0', '--weights', '3/2')
    assert_equal(status, 1)
    assert '--weights' in err

def test_parser_formats():
    args = make_parser().parse_args(['alcove', 'A1'])
    assert_equal(args.format, 'table')

def test_pardeg_trivial():
    status, out, _ = run_cli('pardeg', '--deg', '0', '--weights', '1/2,1/2', '--format', 'tsv')
    assert_equal(status, 0)
    assert_equal(out.splitlines()[1], 'pardeg\t1')

def test_table_agrees_with_json():
    argv = ('dimension', 'A2', '--genus', '3', '--theta', '1/3,1/3', '--theta', '0,1')
    data = run_json(*argv)
    status, out, _ = run_cli(*argv)
    assert_equal(status, 0)
    table = dict(line.split(None, 1) for line in out.splitlines()[2:])
    for key in ['rep_space_dim', 'moduli_dim', 'residue']:
        assert_equal(int(table[key]), data[key])
    assert_equal(table['euler_characteristic'], data['euler_characteristic'])
