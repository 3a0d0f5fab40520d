__all__ = [
    '__project__', '__title__', '__author__', '__copyright__', '__license__',
    '__version__', '__mail__', '__maintainer__', '__status__'
]

__project__ = 'HomoGlue'
__title__ = "homoglue"
__author__ = "HomoGlue Contributors"
__copyright__ = "Copyright 2024-2026, HomoGlue Contributors"
__license__ = "MIT"
__version__ = "0.1"
__mail__ = 'homoglue-dev@lists.example.org'
__maintainer__ = __author__
__status__ = "Alpha"
__packagename__ = "homoglue"
