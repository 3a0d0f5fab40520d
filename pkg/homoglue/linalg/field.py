""" Module for prime fields. """
import galois
import numpy as np

# above this modulus an int64 dot product of length ~100 may overflow
_OBJECT_THRESHOLD = 2**25


class PrimeField:
    """
    The prime field GF(p). Instances are immutable and compared by modulus,
    so two ``PrimeField(5)`` objects can be used interchangeably.

    :Example:
        >>> F = PrimeField(5)
        >>> F.inv(2)
        3
    """

    __slots__ = ('_p', )

    def __init__(self, p):
        """
        :param int p: the modulus, a prime with ``2 <= p < 2**31``.
        :raises ValueError: if ``p`` is not a prime in range.
        """
        if isinstance(p, bool) or not isinstance(p, (int, np.integer)):
            raise ValueError(f'The modulus must be an integer, got {p!r}.')
        p = int(p)
        if not 2 <= p < 2**31:
            raise ValueError(f'The modulus must satisfy 2 <= p < 2**31, '
                             f'got {p}.')
        if not galois.is_prime(p):
            raise ValueError(f'The modulus {p} is not prime.')
        self._p = p

    @property
    def p(self):
        """The characteristic of the field."""
        return self._p

    @property
    def dtype(self):
        """The numpy dtype used to store elements of the field."""
        return np.int64 if self._p < _OBJECT_THRESHOLD else object

    def reduce(self, array):
        """
        Reduce an integer array modulo ``p`` into ``[0, p)``.

        :param array: anything ``numpy.asarray`` accepts.
        :rtype: numpy.ndarray
        """
        array = np.asarray(array)
        if self.dtype is object:
            array = array.astype(object)
        else:
            array = array.astype(np.int64)
        return array % self._p

    def inv(self, a):
        """
        Multiplicative inverse of ``a``.

        :param int a: a field element.
        :raises ZeroDivisionError: if ``a`` is zero modulo ``p``.
        :rtype: int
        """
        a = int(a) % self._p
        if a == 0:
            raise ZeroDivisionError(f'0 has no inverse in GF({self._p}).')
        return pow(a, -1, self._p)

    def galois_field(self):
        """
        The ``galois`` field-array class of the same field.

        :rtype: type[galois.FieldArray]
        """
        return galois.GF(self._p)

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other._p == self._p

    def __hash__(self):
        return hash(('PrimeField', self._p))

    def __repr__(self):
        return f'GF({self._p})'
