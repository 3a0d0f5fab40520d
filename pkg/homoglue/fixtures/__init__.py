__all__ = [
    'FIXTURES', 'FixtureTruth', 'SelftestReport', 'FixtureAlgebra', 'fixture'
]

from .fixture import (FIXTURES, FixtureTruth, SelftestReport, FixtureAlgebra,
                      fixture)
