import os
import time
import math
import logging
import decimal
import numpy as np


logger = logging.getLogger()


class DomainError(ValueError):
    """
    Special exception for inputs outside an operation's domain
    """
    pass


def check_finite(*values, **named):
    """
    Raises a DomainError if any value is nan or infinite
    :param values: numbers to check
    :param named: numbers to check, the keyword is used in the error message
    """
    for index, value in enumerate(values):
        if not math.isfinite(value):
            raise DomainError("Argument {0} must be finite, got {1}".format(index, value))
    for name, value in named.items():
        if not math.isfinite(value):
            raise DomainError("{0} must be finite, got {1}".format(name, value))


def check_nonneg(x, name="x"):
    """
    Raises a DomainError unless x is finite and x >= 0
    :param x: the number
    :param name: name used in the error message
    """
    if not math.isfinite(x) or x < 0.0:
        raise DomainError("{0} must be a finite number >= 0, got {1}".format(name, x))


def sign(x):
    """:return: -1.0, 0.0 or 1.0"""
    if x > 0.0:
        return 1.0
    if x < 0.0:
        return -1.0
    return 0.0


def real_cbrt(x):
    """
    The real cube root, negative for negative x
    :param x: any finite real
    :return: the real number r with r^3 = x
    """
    return float(np.cbrt(x))


def real_root(x, degree):
    """
    The real root of odd or even degree of a nonnegative number, or the real odd root of a negative one
    :param x: the number
    :param degree: positive integer degree
    :return: the real root
    """
    if degree == 3:
        return real_cbrt(x)
    if x < 0.0:
        if degree % 2 == 0:
            raise DomainError("No real root of degree {0} of {1}".format(degree, x))
        return -math.pow(-x, 1.0 / degree)
    return math.pow(x, 1.0 / degree)


def clamp(value, low, high):
    """:return: value limited to the closed interval [low, high]"""
    return min(max(value, low), high)


def log_grid(x_min, x_max, points):
    """
    Logarithmically spaced grid including both end points
    :param x_min: first point, > 0
    :param x_max: last point
    :param points: number of points
    :return: list of floats
    """
    if x_min <= 0.0 or x_max < x_min:
        raise DomainError("Invalid log grid range [{0}, {1}]".format(x_min, x_max))
    return [float(x) for x in np.geomspace(x_min, x_max, points)]


def linear_grid(x_min, x_max, points):
    """
    Evenly spaced grid including both end points
    :return: list of floats
    """
    if x_max < x_min:
        raise DomainError("Invalid grid range [{0}, {1}]".format(x_min, x_max))
    return [float(x) for x in np.linspace(x_min, x_max, points)]


class CompensatedSum:
    """
    Running sum with Neumaier compensation. The low order bits lost by each addition are kept in a separate
    correction term, so the value stays accurate to about one rounding however many terms are added.
    """

    def __init__(self, start=0.0):
        self.__total = start
        self.__correction = 0.0
        self.__count = 0

    def add(self, term):
        """
        Adds a term
        :param term: the number to add
        """
        total = self.__total + term
        if abs(self.__total) >= abs(term):
            self.__correction += (self.__total - total) + term
        else:
            self.__correction += (term - total) + self.__total
        self.__total = total
        self.__count += 1

    @property
    def value(self):
        """the compensated sum"""
        return self.__total + self.__correction

    @property
    def count(self):
        """number of terms added"""
        return self.__count


def format_fixed(value, decimals):
    """
    Formats a number with a fixed number of fractional digits, rounding half to even
    :param value: the float
    :param decimals: fractional digits
    :return: the string
    """
    quantum = decimal.Decimal(1).scaleb(-decimals)
    # wide context so quantize never runs out of digits for large values
    context = decimal.Context(prec=400)
    rounded = decimal.Decimal(value).quantize(quantum, rounding=decimal.ROUND_HALF_EVEN, context=context)
    # avoid -0.0000000000
    if rounded.is_zero():
        rounded = abs(rounded)
    return "{0:f}".format(rounded)


def format_sci(value, sig_digits):
    """
    Formats a number in scientific notation with sig_digits significant digits, rounding half to even
    :param value: the float
    :param sig_digits: significant digits, >= 1
    :return: the string, ex: 7.57e-04
    """
    if value == 0.0:
        # Decimal keeps the exponent of a zero, ex: 0.00e+2
        return "{0:.{1}e}".format(0.0, sig_digits - 1)
    text = "{0:.{1}e}".format(decimal.Decimal(value), sig_digits - 1)
    mantissa, exponent = text.split("e")
    # python pads float exponents to two digits, Decimal does not
    exp_value = int(exponent)
    return "{0}e{1}{2:02d}".format(mantissa, "-" if exp_value < 0 else "+", abs(exp_value))


def delete_file(file_path):
    """
    Deletes a file
    :param file_path: the full path to the file
    :return: None if no errors, otherwise return error as string
    """
    try:
        if os.path.exists(file_path):
            os.remove(file_path)
        return None
    except (IOError, OSError) as e:
        error_msg = "Could not delete {0}. Received error {1}".format(file_path, e)
        logger.error(error_msg)
        return error_msg


def delete_by_day(num_days, file_path):
    """
    Delete file older than a certain date
    :param num_days: any files older than this are deleted
    :param file_path: the full path to the file
    :return: none if no error, or the error if encountered - will be a IOError or OSError
    """
    # get the time in seconds, note a day is 24 hours * 60 min * 60 sec
    time_in_secs = time.time() - (num_days * 24 * 60 * 60)
    # check that the path exists before trying to get modification time
    if os.path.isfile(file_path):
        stat = os.stat(file_path)
        if stat.st_mtime <= time_in_secs:
            error = delete_file(file_path)
            logger.info("Deleted the following log: {0}".format(file_path))
            return error
    return None


def make_all_dir_in_path(dir_path):
    """
    makes all the directories in the path if they don't exist, handles if some folders already exist
    :param dir_path: a file path
    :return: None if no errors, otherwise return error as string
    """
    try:
        if not os.path.exists(dir_path):
            os.makedirs(dir_path)
    except (IOError, OSError) as e:
        if not os.path.isdir(dir_path):
            error_msg = "Could not make directory {0}. Received error {1}".format(dir_path, e)
            logger.error(error_msg)
            return error_msg
    return None


def power_two_fifths(x):
    """
    x^(2/5) as the square of the real fifth root, so only radicals are involved
    :param x: x >= 0
    :return: x^(2/5)
    """
    root = real_root(x, 5)
    return root * root
