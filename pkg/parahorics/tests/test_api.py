from numpy.testing import assert_equal

import parahorics
from parahorics import api
from parahorics.info import __version__, INSTALL_REQUIRES

def test_version():
    assert_equal(parahorics.__version__, __version__)
    assert_equal([r.split('>=')[0] for r in INSTALL_REQUIRES], ['numpy', 'scipy'])

def test_api_round_trip():
    rs = api.build_root_system('A1')
    spec = api.moduli_spec(rs, 2, [['1/2']])
    assert_equal(api.moduli_dim(spec), 4)
    assert_equal(api.pardeg(api.parabolic_line(0, ['1/2', '1/2'])), 1)
    for name in ['ApartmentError', 'ParahoricError', 'LocalTypeError',
                 'DimensionError', 'ParabolicError', 'RootSystemError']:
        assert issubclass(getattr(api, name), ValueError)
