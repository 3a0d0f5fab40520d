import matplotlib
import pytest

matplotlib.use('Agg')

from homoglue import Plotter
from homoglue.auscond import is_gnm
from homoglue.fixtures import fixture
from homoglue.quiver import regular, simple
from homoglue.resolve import min_resolution


def test_plot_complex(tmp_path):
    A = fixture('A3rad2').algebra
    filename = tmp_path / 'res.png'
    Plotter().plot_complex(min_resolution(simple(A, 0), 3), filename)
    assert filename.exists()


def test_plot_gnm(tmp_path):
    A = fixture('kxx2').algebra
    filename = tmp_path / 'gnm.png'
    Plotter().plot_gnm(is_gnm(simple(A, 0), 3, 0, cutoff=2), filename)
    assert filename.exists()


def test_plot_quiver(tmp_path):
    filename = tmp_path / 'quiver.png'
    Plotter().plot_quiver(fixture('kron2').algebra, filename)
    assert filename.exists()


def test_plot_wrong_input():
    with pytest.raises(ValueError):
        Plotter().plot_complex(regular(fixture('kA2').algebra))
