""" Module for the textual and json-lines report output. """
import json
import sys

import numpy as np

FORMATS = ('text', 'json-lines')


def _plain(value):
    """``json`` fallback for numpy scalars, tuples of them and reports."""
    if isinstance(value, np.integer):
        return int(value)
    if isinstance(value, (set, frozenset)):
        return sorted(value)
    return str(value)


class Writer:
    """
    Implementation of a writer class, for textual output.

    A record is a flat dictionary. In ``'text'`` format the ``text`` entry
    is printed as is (or ``key: value`` lines when it is missing); in
    ``'json-lines'`` format every record is one JSON object with sorted
    keys, so equal records print equal bytes.

    :Example:
        >>> writer = Writer('json-lines')
        >>> writer.write({'command': 'resolve', 'length': 2})
        {"command": "resolve", "length": 2}
    """

    def __init__(self, format='text', stream=None):
        """
        :param str format: ``'text'`` or ``'json-lines'``.
        :param stream: the output stream, ``sys.stdout`` by default.
        """
        if format not in FORMATS:
            raise ValueError(f'Unknown format {format!r}; expected one of '
                             f'{", ".join(FORMATS)}.')
        self._format = format
        self._stream = stream
        self.records = 0

    @property
    def format(self):
        return self._format

    @property
    def stream(self):
        return sys.stdout if self._stream is None else self._stream

    def write(self, record):
        """
        Write one record.

        :param dict record: the record.
        """
        if self._format == 'json-lines':
            line = json.dumps(record, sort_keys=True, default=_plain)
        elif 'text' in record:
            line = str(record['text'])
        else:
            line = '\n'.join(f'{key}: {value}'
                             for key, value in record.items())
        print(line, file=self.stream)
        self.records += 1
