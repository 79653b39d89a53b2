"""
Defines the App, which holds the command registry and the UI, parses the
command line and turns command results into exit codes.
"""

import argparse
import logging
import sys

import linnet.ui
import linnet.util as util
import linnet.default_commands as default_commands
from linnet.commands import Command, CommandDict, Handler
from linnet.util import NetError

# set up logging
logger = logging.getLogger(__name__)

LOG_FORMAT = '[%(levelname)-8s] %(name)15s: %(message)s'


class App(object):
    """
    The command-line application
    """

    def __init__(self, debug=False, pretty=False, ui=None, **ui_kwargs):
        self.debug = debug
        self.pretty = pretty
        self.commands = CommandDict()

        new_ui = ui or linnet.ui.default_ui
        self.ui = new_ui(self, **ui_kwargs)

        default_commands.init_commands(self)

    def add_command(self, name, help=None, arguments=()):
        if name not in self.commands:
            self.commands[name] = Command(name, help, arguments)
        return self.commands[name]

    def on(self, name, help=None, arguments=(), pre_handler=util.sentinel, overwrite=False):
        """
        Decorator registering f as the handler of command name. f takes the App
        and the parsed arguments and returns a CommandResult.

            @app.on('hull', "Print the hull of a set of vertices",
                    [argument('--n', type=int, required=True)])
            def hull_command(app, args): ...

        By default FILE arguments are loaded into args.net before f runs.
        """
        def decorator(f):
            h = Handler(f, pre_handler)
            self.add_command(name, help, arguments).set_handler(h, overwrite)
            return h
        return decorator

    def build_parser(self):
        parser = argparse.ArgumentParser(prog='linnet', description="Linked nets over Z^n-quivers")
        parser.add_argument('--pretty', action='store_true', help="human-readable output")
        parser.add_argument('--debug', action='store_true', help="log debugging output to standard error")
        subparsers = parser.add_subparsers(dest='command', metavar='COMMAND')
        subparsers.required = True
        for name in sorted(self.commands):
            self.commands[name].add_to(subparsers)
        return parser

    def run(self, argv=None):
        """ run one command line; returns the exit code """
        try:
            args = self.build_parser().parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else 2

        self.debug = self.debug or args.debug
        self.pretty = self.pretty or args.pretty
        if self.debug:
            logging.getLogger('linnet').setLevel(logging.DEBUG)

        command = self.commands[args.command]
        try:
            result = command.do(self, args)
        except NetError as e:
            logger.debug("{} failed: {!r}".format(command, e))
            self.ui.error("{}: {}".format(type(e).__name__, e))
            return 2
        self.ui.show(result)
        return result.exit_code

    # UI calls
    def output(self, message):
        self.ui.output(message)

    def error(self, message):
        self.ui.error(message)


def main(argv=None):
    debug = '--debug' in (sys.argv[1:] if argv is None else argv)
    logging.basicConfig(format=LOG_FORMAT, stream=sys.stderr,
                        level=logging.DEBUG if debug else logging.WARNING)
    sys.exit(App().run(argv))
