"""
Defines commands, their handlers and the registry the App looks them up in
"""

import collections

import linnet.util as util
from linnet.parser import load_net
from linnet.util import NetError

# set up logging
import logging
logger = logging.getLogger(__name__)


class Argument(collections.namedtuple('Argument', ['flags', 'kwargs'])):
    """ the positional and keyword arguments of one argparse add_argument call """
    __slots__ = ()

def argument(*flags, **kwargs):
    return Argument(flags, kwargs)

class Exclusive(collections.namedtuple('Exclusive', ['arguments', 'required'])):
    """ arguments of which at most one (exactly one if required) may be given """
    __slots__ = ()

def exclusive(*arguments, **kwargs):
    return Exclusive(arguments, kwargs.get('required', False))


class CommandResult(object):
    """
    What a command hands back to the App: the exit code, a JSON-serializable
    payload for standard output, and the template used for --pretty output.
    """

    def __init__(self, exit_code, payload=None, template=None):
        if exit_code not in (0, 1, 2):
            raise NetError("Exit code must be 0, 1 or 2, got {}".format(exit_code))
        self.exit_code = exit_code
        self.payload = payload
        self.template = template

    def __str__(self):
        return "CommandResult({}, template={})".format(self.exit_code, self.template)
    def __repr__(self):
        return '{} at {}'.format(str(self), hex(id(self)))


class Command(object):
    """
    A subcommand of the command line: its name, help text, argparse arguments
    and the handler run on the parsed arguments.
    """

    def __init__(self, name, help=None, arguments=()):
        if not name.replace('-', '').isalpha():
            raise NetError('Command names must be alphabetic.')
        self.name = name
        self.help = help
        self.arguments = list(arguments)
        self.handler = None

    def set_handler(self, h, overwrite=False):
        if self.handler is not None and not overwrite:
            raise NetError("Command '{}' already has a handler".format(self.name))
        self.handler = h

    def add_to(self, subparsers):
        """ add this command to an argparse subparsers object """
        sub = subparsers.add_parser(self.name, help=self.help, description=self.help)
        for a in self.arguments:
            if isinstance(a, Exclusive):
                group = sub.add_mutually_exclusive_group(required=a.required)
                for b in a.arguments:
                    group.add_argument(*b.flags, **b.kwargs)
            else:
                sub.add_argument(*a.flags, **a.kwargs)
        sub.set_defaults(command=self.name)
        return sub

    def do(self, app, args):
        if self.handler is None:
            raise NetError("Command '{}' has no handler".format(self.name))
        return self.handler(app, args)

    def __str__(self):
        return "Command('{}')".format(self.name)
    def __repr__(self):
        return '{} at {}'.format(str(self), hex(id(self)))


class Handler(object):
    """
    A function wrapper called on a command.
    The pre-handler runs first and may replace the parsed arguments' FILE with
    the loaded net, or cancel the command by returning a CommandResult.
    """

    def __init__(self, func, pre_handler=util.sentinel):
        self.func = func
        self.pre_handler = pre_handler if pre_handler is not util.sentinel else self.default_pre_handler

    def __call__(self, app, args):
        logger.debug('Calling handler {}({})'.format(self.func.__name__, args))
        if self.pre_handler:
            cancel = self.pre_handler(app, args)
            if cancel is not None:
                return cancel
        return self.func(app, args)

    def default_pre_handler(self, app, args):
        """ load the net named by a FILE argument; '-' reads the input stream """
        if getattr(args, 'file', None) is None:
            return None
        source = app.ui.instream if args.file == '-' else args.file
        args.net = load_net(source)
        return None

    def __str__(self):
        return "Handler('{}')".format(self.func.__name__)
    def __repr__(self):
        return '{} at {}'.format(str(self), hex(id(self)))


class CommandDict(dict):
    """ Maps command names to Commands """
    pass
