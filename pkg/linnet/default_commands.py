"""
Defines the default commands: validate, hull, intersection, decompose, gen and example
"""

import json

import linnet.parser as parser
from linnet.analysis import check_intersection_property, decompose, intersection_property_at
from linnet.commands import CommandResult, argument, exclusive
from linnet.gen import GenSpec, fixture_nonsemisimple, random_semisimple_net
from linnet.net import check_all, check_pure_and_generated, validate
from linnet.quiver import hull
from linnet.util import ParseError, PreconditionError

# set up logging
import logging
logger = logging.getLogger(__name__)

FILE = argument('file', metavar='FILE', help="net file, or - for standard input")
ALLOW_LARGE = argument('--allow-large', action='store_true', help="allow n = 4")


def _require_valid(p):
    report = validate(p)
    if not report.passed:
        raise PreconditionError("The net file is structurally invalid: {}".format(
            "; ".join(w['condition'] for w in report.witnesses)), [report])


def init_commands(self):

    @self.on('validate', "Check the structure and every axiom of a net", [FILE])
    def validate_command(app, args):
        report = check_all(args.net)
        return CommandResult(0 if report.passed else 1, report.to_json(), 'report')

    @self.on('hull', "Print the hull of a set of vertices",
        [argument('--n', type=int, required=True, help="the quiver parameter"),
         argument('--set', dest='vertices', required=True, metavar='VERTICES',
                  help="vertices as semicolon-separated twists, e.g. '0,0;3,0'")])
    def hull_command(app, args):
        H = parser.parse_vertex_set(args.vertices, args.n)
        if not H:
            raise ParseError("--set names no vertices")
        res = sorted(hull(H))
        return CommandResult(0, {'n': args.n, 'set': [list(v) for v in sorted(set(H))],
                                 'hull': [list(v) for v in res]}, 'hull')

    @self.on('intersection', "Check the intersection property",
        [FILE,
         exclusive(argument('--at', metavar='VERTEX', help="one vertex, e.g. 0,0,0"),
                   argument('--generators', action='store_true', help="every generator"),
                   argument('--window', action='store_true', help="every window vertex"),
                   required=True),
         argument('--multidegree', action='store_true', help="read --at as a multidegree of the frame"),
         ALLOW_LARGE])
    def intersection_command(app, args):
        p = args.net
        _require_valid(p)
        if args.at is not None:
            if args.multidegree:
                if p.frame is None:
                    raise ParseError("--multidegree needs a frame in the net file", 'frame')
                v = p.frame.to_twists(parser.parse_int_tuple(args.at))
            else:
                v = parser.parse_vertex_arg(args.at, p.n)
            cert = intersection_property_at(p, v, args.allow_large)
            payload = {'vertex': list(v), 'holds': cert is None,
                       'violation': cert.to_json() if cert is not None else None}
            return CommandResult(0 if cert is None else 1, payload, 'intersection')

        if args.generators:
            generation = check_pure_and_generated(p)
            report = check_intersection_property(p, 'generators', generation, args.allow_large)
        else:
            report = check_intersection_property(p, 'window', allow_large=args.allow_large)
        payload = report.to_json()
        payload['holds'] = report.passed
        payload['violation'] = report.certificate.to_json() if report.certificate is not None else None
        return CommandResult(0 if report.passed else 1, payload, 'intersection')

    @self.on('decompose', "Split a semisimple net into simple summands",
        [FILE, argument('--out', metavar='PATH', help="also write the result to PATH"), ALLOW_LARGE])
    def decompose_command(app, args):
        p = args.net
        _require_valid(p)
        result = decompose(p, args.allow_large)

        payload = parser.to_data(p)
        payload.update(result.to_json())
        if args.out:
            with open(args.out, 'w') as f:
                f.write(json.dumps(payload, sort_keys=True) + "\n")
        return CommandResult(0 if result.semisimple else 1, payload, 'decomposition')

    @self.on('gen', "Generate a random semisimple net",
        [exclusive(argument('--seeds', metavar='VERTICES', help="one seed per summand, e.g. '0,0,0;1,0,0'"),
                   argument('--summands', type=int, metavar='K', help="draw K seeds at random"),
                   argument('--spec', metavar='PATH', help="a generator spec file, or - for standard input"),
                   required=True),
         argument('--n', type=int, help="the quiver parameter, required unless --spec is given"),
         argument('--rng', type=int, default=None, metavar='SEED', help="random seed (default 0)"),
         argument('--radius', type=int, default=None, help="window radius around the hull, at least n+1"),
         argument('--conjugate', action='store_true', help="apply a random change of basis"),
         argument('--spread', type=int, default=1, help="distance from the origin random seeds are drawn from")])
    def gen_command(app, args):
        if args.spec is not None:
            if args.rng is not None or args.radius is not None or args.conjugate:
                raise ParseError("--rng, --radius and --conjugate come from the spec file with --spec")
            spec = parser.load_gen_spec(app.ui.instream if args.spec == '-' else args.spec)
            if args.n is not None and args.n != spec.n:
                raise ParseError("--n {} disagrees with n = {} in the spec file".format(args.n, spec.n), 'n')
        elif args.n is None:
            raise ParseError("--n is required with --seeds or --summands")
        elif args.seeds is not None:
            spec = GenSpec(args.n, parser.parse_vertex_set(args.seeds, args.n), args.rng or 0, args.radius,
                           args.conjugate)
        else:
            spec = GenSpec.from_random(args.n, args.summands, args.rng or 0, args.conjugate, args.spread,
                                       args.radius)
        p, k = random_semisimple_net(spec)
        logger.info("Generated a net with {} summands from {}".format(k, spec))
        return CommandResult(0, parser.to_data(p), 'net')

    @self.on('example', "Print a bundled example net",
        [argument('name', choices=['nonsemisimple'], help="which example")])
    def example_command(app, args):
        return CommandResult(0, parser.to_data(fixture_nonsemisimple()), 'net')
