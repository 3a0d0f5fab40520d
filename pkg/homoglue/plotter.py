""" Module for plotting. """
import matplotlib.pyplot as plt
import networkx as nx
import numpy as np

from .auscond import GnmReport, CoGnmReport
from .quiver import BoundQuiverAlgebra
from .resolve import AugmentedComplex
from .utils import check_consistency


class Plotter:
    """
    Implementation of a plotter class, for easy visualizations.

    Every method draws on a new figure and either saves it to
    ``filename`` or shows it.

    :Example:
        >>> plotter = Plotter()
        >>> plotter.plot_complex(min_resolution(simple(A, 0), 3), 'res.png')
    """

    @staticmethod
    def _finish(fig, filename):
        if filename:
            fig.savefig(filename)
            plt.close(fig)
        else:
            plt.show()

    def plot_complex(self, complex, filename=None, **kwargs):
        """
        Plot the dimension vectors of the terms of a complex as stacked
        bars, one colour per vertex.

        :param AugmentedComplex complex: the complex.
        :param str filename: where to save the figure; shown if ``None``.
        """
        check_consistency(complex, AugmentedComplex)
        dims = np.array([t.dims for t in complex.terms]).reshape(
            len(complex.terms), -1)
        degrees = np.arange(len(complex.terms))
        fig, ax = plt.subplots()
        bottom = np.zeros(len(degrees))
        for v in range(dims.shape[1]):
            ax.bar(degrees, dims[:, v], bottom=bottom, label=f'vertex {v}',
                   **kwargs)
            bottom += dims[:, v]
        ax.set_xlabel('degree')
        ax.set_ylabel('dimension')
        ax.set_xticks(degrees)
        name = complex.module.name or 'M'
        ax.set_title(f'{complex.direction} of {name}')
        ax.legend()
        self._finish(fig, filename)

    def plot_gnm(self, report, filename=None, **kwargs):
        """
        Plot the dimensions of the rows of a :class:`GnmReport` (or
        :class:`CoGnmReport`) against their bounds. Dimensions beyond the
        cutoff are drawn at ``cutoff + 1`` with a cross.

        :param report: the report.
        :param str filename: where to save the figure; shown if ``None``.
        """
        check_consistency(report, (GnmReport, CoGnmReport))
        index = [row.index for row in report.rows]
        bounds = [row.bound for row in report.rows]
        fig, ax = plt.subplots()
        ax.step(index, bounds, where='mid', color='grey', label='bound')
        for row in report.rows:
            decided = row.value is not None
            value = row.value if decided else report.cutoff + 1
            colour = 'tab:green' if row.ok else 'tab:red'
            ax.plot(row.index, value, 'o' if decided else 'x',
                    color=colour, **kwargs)
        ax.axhline(report.cutoff, linestyle=':', color='black',
                   label='cutoff')
        ax.set_xlabel('degree')
        ax.set_ylabel('dimension')
        ax.set_title(str(report).splitlines()[0])
        ax.legend()
        self._finish(fig, filename)

    def plot_quiver(self, algebra, filename=None, **kwargs):
        """
        Draw the quiver of an algebra with its arrow ids.

        :param BoundQuiverAlgebra algebra: the algebra.
        :param str filename: where to save the figure; shown if ``None``.
        """
        check_consistency(algebra, BoundQuiverAlgebra)
        graph = algebra.quiver.graph
        pos = nx.circular_layout(graph)
        fig, ax = plt.subplots()
        nx.draw_networkx(graph, pos, ax=ax, node_color='lightgrey',
                         connectionstyle='arc3,rad=0.2', **kwargs)
        labels = {}
        for u, v, key in graph.edges(keys=True):
            labels[(u, v)] = ','.join(filter(None, [labels.get((u, v)), key]))
        nx.draw_networkx_edge_labels(nx.DiGraph(graph), pos,
                                     edge_labels=labels, ax=ax)
        ax.set_title(algebra.name or 'quiver')
        ax.set_axis_off()
        self._finish(fig, filename)
