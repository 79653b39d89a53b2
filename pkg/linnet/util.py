"""
Classes and functions with no internal depencies, which can be used across the package.
"""

import inflect as inflect_module
inflect = inflect_module.engine()
inflect.defnoun("vertex", "vertices")


class NetError(Exception):
    """ base for anything that goes wrong while building or checking a net """


class ParseError(NetError):
    """ raised on malformed net files and command-line vertex syntax """
    def __init__(self, message, field=None):
        super(ParseError, self).__init__(message)
        self.field = field


class WindowInsufficient(NetError):
    """
    A path or arrow needed for a computation leaves the window.
    missing holds the (vertex, type) arrows that were looked for and not found.
    """
    def __init__(self, message, missing=()):
        super(WindowInsufficient, self).__init__(message)
        self.missing = sorted(set(missing))


class NotASubnet(NetError):
    """ the given subspaces are not carried into each other by some arrow """
    def __init__(self, message, arrow=None):
        super(NotASubnet, self).__init__(message)
        self.arrow = arrow


class PreconditionError(NetError):
    """
    The hypotheses of an operation are not met.
    reports holds any CheckReports that explain why.
    """
    def __init__(self, message, reports=()):
        super(PreconditionError, self).__init__(message)
        self.reports = list(reports)


class DecompositionError(NetError):
    """ an internal assertion of the decomposition failed """


def vertex_str(v):
    """ comma-separated twists, the syntax the command line accepts """
    return ",".join(str(x) for x in v)

def type_set_str(types):
    return "{" + ",".join(str(t) for t in sorted(types)) + "}"

def list_str(l):
    """ print a list using elements' __str__'s instead of __repr__'s """
    return "[" + ", ".join([p.__str__() for p in l]) + "]"

def count_str(count, noun):
    """ '1 summand', '3 summands' """
    return "{} {}".format(count, inflect.plural(noun, count))


# default for keyword arguments where None is a valid input
sentinel = object()
