# -*- coding: utf-8 -*-
"""various utilities not related to Dirac structures"""
import time
import warnings
import numpy as np

global_verbosity = 1
"""messages are printed and warnings issued if the per-call `verbose`
(defaulting to this value) is large enough, -9 is maximally quiet"""

def is_str(var):
    """`bytes` also fit the bill.

    >>> from ncdirac.utilities.utils import is_str
    >>> assert is_str(b'a') * is_str('a') * is_str(u'a') * is_str(r'b')
    >>> assert not is_str([1]) and not is_str(1)

    """
    return isinstance(var, (bytes, str))

def is_integer(var):
    """return `True` for Python and numpy integers, but not for `bool`.

    >>> import numpy as np
    >>> from ncdirac.utilities.utils import is_integer
    >>> assert is_integer(3) and is_integer(np.int64(-2))
    >>> assert not is_integer(True) and not is_integer(2.0)

    """
    return isinstance(var, (int, np.integer)) and not isinstance(var, bool)

def num2str(val, significant_digits=2):
    """return a short string representation of a number, used for timings.

    >>> from ncdirac.utilities import utils
    >>> print([utils.num2str(val) for val in [12345, 1.2345, .012345, 0]])
    ['12345', '1.2', '0.012', '0']

    """
    if val == 0:
        return '0'
    order_of_magnitude = int(np.floor(np.log10(abs(val))))
    if order_of_magnitude + 1 >= significant_digits:
        return str(int(np.round(val)))
    s = ('%.' + str(significant_digits - 1 - order_of_magnitude) + 'f') % val
    return s

def print_warning(msg, method_name=None, class_name=None, iteration=None,
                  verbose=None):
    """issue a `UserWarning` with origin information unless too quiet"""
    if verbose is None:
        verbose = global_verbosity
    if verbose >= -2:
        warnings.warn(msg + ' (' +
              ('class=%s ' % str(class_name) if class_name else '') +
              ('method=%s ' % str(method_name) if method_name else '') +
              ('depth=%s' % str(iteration) if iteration is not None else '') +
              ')')

def print_message(msg, method_name=None, class_name=None, iteration=None,
                  verbose=None):
    """print a note with origin information if ``verbose >= 0``.

    >>> from ncdirac.utilities.utils import print_message
    >>> print_message('orbit done', 'explore', verbose=0)
    NOTE (module=ncdirac, method=explore):  orbit done
    >>> print_message('never shown', verbose=-1)

    """
    if verbose is None:
        verbose = global_verbosity
    if verbose >= 0:
        print('NOTE (module=ncdirac' +
              (', class=' + str(class_name) if class_name else '') +
              (', method=' + str(method_name) if method_name else '') +
              (', depth=' + str(iteration) if iteration is not None else '') +
              '): ', msg)

class ElapsedWCTime(object):
    """wall clock timer with laps, for progress reports.

    `elapsed` is the time since creation or `reset`, excluding pauses,
    and `lap` returns the time since the previous lap.

    >>> from ncdirac.utilities.utils import ElapsedWCTime
    >>> timer = ElapsedWCTime().pause()
    >>> assert timer.paused and timer.elapsed < 0.1
    >>> assert 0 <= timer.resume().lap() < 0.1 and not timer.paused
    >>> assert 0 <= timer.elapsed < 0.1

    """
    def __init__(self, time_offset=0):
        """start timing with ``time_offset`` seconds already elapsed"""
        self._time_offset = time_offset
        self.reset()
    def reset(self):
        self._start = self._last_lap = time.perf_counter()
        self._paused_total = 0
        self._paused_at = None
        return self
    @property
    def paused(self):
        return self._paused_at is not None
    def pause(self):
        """stop the clock until `resume`"""
        if self._paused_at is None:
            self._paused_at = time.perf_counter()
        return self
    def resume(self):
        if self._paused_at is not None:
            self._paused_total += time.perf_counter() - self._paused_at
            self._paused_at = None
        return self
    @property
    def elapsed(self):
        now = self._paused_at if self.paused else time.perf_counter()
        return self._time_offset + now - self._start - self._paused_total
    def lap(self):
        """return the seconds since the last lap and start a new one"""
        now = time.perf_counter()
        lap, self._last_lap = now - self._last_lap, now
        return lap
