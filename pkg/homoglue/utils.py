"""Utils module"""
import numpy as np

DEFAULT_CUTOFF = 8
DEFAULT_SEED = 0
DEFAULT_TRIALS = 64
DEFAULT_SAMPLE_SIZE = 25
DEFAULT_MAX_DIM = 4
DEFAULT_PRIME = 5
DEFAULT_CACHE_SIZE = 256


class HypothesisError(ValueError):
    """
    A precondition of an operation fails on its input, e.g. a sequence
    that is not Hom-exact for the subcategory it is glued over. Raised for
    inputs the caller can fix; any other ``ValueError`` is a broken
    contract inside the library.
    """


def check_consistency(object, object_instance, subclass=False):
    """Helper function to check object inheritance consistency.
       Given a specific ``'object'`` we check if the object is
       instance of a specific ``'object_instance'``, or in case
       ``'subclass=True'`` we check if the object is subclass
       if the ``'object_instance'``.

    :param (iterable or class object) object: The object to check the
        inheritance
    :param Object object_instance: The parent class from where the object
        is expected to inherit
    :param bool subclass: Check if is a subclass and not instance
    :raises ValueError: If the object does not inherit from the
        specified class
    """
    if not isinstance(object, (list, set, tuple)):
        object = [object]

    for obj in object:
        try:
            if not subclass:
                assert isinstance(obj, object_instance)
            else:
                assert issubclass(obj, object_instance)
        except AssertionError:
            raise ValueError(
                f"{type(obj).__name__} must be {object_instance}.")


def check_non_negative(value, name):
    """
    Check that ``value`` is a non-negative integer.

    :param int value: the value to check.
    :param str name: the name used in the error message.
    :raises ValueError: if the value is negative or not an integer.
    """
    if isinstance(value, bool) or not isinstance(value, (int, np.integer)):
        raise ValueError(f'{name} must be an integer, got {value!r}.')
    if value < 0:
        raise ValueError(f'{name} must be non-negative, got {value}.')


def check_same_algebra(*modules):
    """
    Check that all the given representations (or morphisms) live over the
    same algebra.

    :raises ValueError: if two objects belong to different algebras.
    """
    algebras = {id(m.algebra) for m in modules}
    if len(algebras) > 1:
        raise ValueError('All objects must be defined over the same algebra.')


def default_rng(seed=None):
    """
    Return a numpy random generator. ``None`` means ``DEFAULT_SEED``, so
    every random experiment is reproducible unless asked otherwise.

    :param int seed: the seed, or an existing generator.
    :rtype: numpy.random.Generator
    """
    if isinstance(seed, np.random.Generator):
        return seed
    return np.random.default_rng(DEFAULT_SEED if seed is None else seed)
