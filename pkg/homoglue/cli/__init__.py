__all__ = [
    'run', 'main', 'build_parser', 'ParseError', 'HypothesisError', 'OK',
    'ALARM', 'USAGE', 'INCONCLUSIVE'
]

from ..formats import ParseError
from ..utils import HypothesisError
from .commands import OK, ALARM, USAGE, INCONCLUSIVE
from .main import run, main, build_parser
