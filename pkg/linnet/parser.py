"""
Reads and writes the net file format, and the vertex syntax of the command line.

A net file is a JSON object with the fields n, window, dims, generators and
arrows, and optionally labels, frame and boundary. Rationals are integers or
"p/q" strings. Unknown fields are refused.

A generator spec file is a JSON object with n and seeds, and optionally
seed_rng, window_radius and conjugate.
"""

import json

from linnet.exactla import RMatrix, rational
from linnet.quiver import Vertex, MultidegreeFrame, check_type
from linnet.net import ArrowRef, NetPresentation
from linnet.gen import GenSpec
from linnet.util import NetError, ParseError

# set up logging
import logging
logger = logging.getLogger(__name__)

FIELDS = ('n', 'window', 'dims', 'generators', 'arrows', 'labels', 'frame', 'boundary')
REQUIRED = ('n', 'window', 'dims', 'generators', 'arrows')
GEN_FIELDS = ('n', 'seeds', 'seed_rng', 'window_radius', 'conjugate')


def parse_rational(x, field=None):
    if isinstance(x, float):
        raise ParseError("Rational {!r} must be an integer or a \"p/q\" string".format(x), field)
    try:
        return rational(x)
    except NetError as e:
        raise ParseError(str(e), field)

def parse_vertex(twists, n=None, field=None):
    if not isinstance(twists, (list, tuple)):
        raise ParseError("A vertex must be a list of twists, got {!r}".format(twists), field)
    try:
        v = Vertex(twists)
    except NetError as e:
        raise ParseError(str(e), field)
    if n is not None and v.n != n:
        raise ParseError("Vertex {} should have {} twists".format(v, n + 1), field)
    return v

def parse_vertex_arg(text, n=None):
    """ '0,1,1' -> Vertex((0,1,1)) """
    try:
        twists = [int(x) for x in text.split(',')]
    except ValueError:
        raise ParseError("Vertex '{}' must be comma-separated integers".format(text))
    return parse_vertex(twists, n)

def parse_int_tuple(text):
    """ '4,1,1' -> (4, 1, 1), for multidegrees """
    try:
        return tuple(int(x) for x in text.split(','))
    except ValueError:
        raise ParseError("'{}' must be comma-separated integers".format(text))

def parse_vertex_set(text, n=None):
    """ '0,0;3,0' -> [Vertex((0,0)), Vertex((3,0))] """
    return [parse_vertex_arg(part.strip(), n) for part in text.split(';') if part.strip()]


def _parse_matrix(raw, rows, cols, field):
    if not isinstance(raw, list) or len(raw) != rows or any(not isinstance(r, list) for r in raw):
        raise ParseError("Matrix must be a list of {} rows".format(rows), field)
    if any(len(r) != cols for r in raw):
        raise ParseError("Matrix rows must have {} entries".format(cols), field)
    return RMatrix(rows, cols, [[parse_rational(x, field) for x in r] for r in raw])

def _parse_arrows(raw, n, dims, field, inside):
    if not isinstance(raw, list):
        raise ParseError("{} must be a list".format(field), field)
    res = {}
    for i, a in enumerate(raw):
        where = '{}[{}]'.format(field, i)
        if not isinstance(a, dict) or set(a) != {'from', 'type', 'matrix'}:
            raise ParseError("{} needs exactly the keys from, type, matrix".format(where), where)
        source = parse_vertex(a['from'], n, where)
        try:
            t = check_type(n, a['type'])
        except NetError as e:
            raise ParseError(str(e), where)
        ref = ArrowRef(source, t)
        if ref in res:
            raise ParseError("Arrow {} is given twice".format(ref), where)
        target = ref.target
        if target not in dims:
            raise ParseError("Arrow {} arrives outside the window".format(ref), where)
        if inside:
            if source not in dims:
                raise ParseError("Arrow {} leaves from outside the window".format(ref), where)
            cols = dims[source]
        else:
            matrix = a['matrix']
            cols = len(matrix[0]) if isinstance(matrix, list) and matrix and isinstance(matrix[0], list) else 0
        res[ref] = _parse_matrix(a['matrix'], dims[target], cols, where)
    return res

def parse(data):
    """ a NetPresentation from the decoded JSON object """
    if not isinstance(data, dict):
        raise ParseError("A net file must hold a JSON object")
    unknown = sorted(set(data) - set(FIELDS))
    if unknown:
        raise ParseError("Unknown field {}".format(unknown[0]), unknown[0])
    for f in REQUIRED:
        if f not in data:
            raise ParseError("Missing field {}".format(f), f)

    n = data['n']
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("n must be an integer >= 1", 'n')
    if not isinstance(data['window'], list) or not isinstance(data['dims'], list):
        raise ParseError("window and dims must be lists", 'window')
    window = [parse_vertex(v, n, 'window') for v in data['window']]
    if len(set(window)) != len(window):
        raise ParseError("window repeats a vertex", 'window')
    if len(data['dims']) != len(window):
        raise ParseError("dims must be parallel to window", 'dims')
    for d in data['dims']:
        if not isinstance(d, int) or isinstance(d, bool) or d < 0:
            raise ParseError("dimension {!r} is not a nonnegative integer".format(d), 'dims')
    dims = dict(zip(window, data['dims']))
    if not isinstance(data['generators'], list):
        raise ParseError("generators must be a list", 'generators')
    generators = [parse_vertex(v, n, 'generators') for v in data['generators']]

    arrows = _parse_arrows(data['arrows'], n, dims, 'arrows', inside=True)
    boundary = _parse_arrows(data.get('boundary', []), n, dims, 'boundary', inside=False)

    frame = None
    if data.get('frame') is not None:
        f = data['frame']
        if not isinstance(f, dict) or set(f) != {'base', 'generators'}:
            raise ParseError("frame needs exactly the keys base, generators", 'frame')
        try:
            frame = MultidegreeFrame(f['base'], f['generators'])
        except (NetError, TypeError, ValueError) as e:
            raise ParseError("Invalid frame: {}".format(e), 'frame')

    labels = {}
    if data.get('labels') is not None:
        raw = data['labels']
        if not isinstance(raw, list) or len(raw) != len(window):
            raise ParseError("labels must be parallel to window", 'labels')
        for v, label in zip(window, raw):
            if label is not None:
                if not isinstance(label, list) or any(not isinstance(x, int) for x in label):
                    raise ParseError("label {!r} is not a list of integers".format(label), 'labels')
                labels[v] = tuple(label)

    p = NetPresentation(n, window, dims, arrows, generators, labels, frame, boundary)
    logger.debug("Parsed {}".format(p))
    return p

def loads(text):
    try:
        data = json.loads(text)
    except ValueError as e:
        raise ParseError("Not a JSON document: {}".format(e))
    return parse(data)

def load_net(path_or_file):
    """ read a net file; '-' or an open file object is read as a stream """
    if hasattr(path_or_file, 'read'):
        return loads(path_or_file.read())
    try:
        with open(path_or_file) as f:
            return loads(f.read())
    except (IOError, OSError) as e:
        raise ParseError("Cannot read {}: {}".format(path_or_file, e))


def _arrow_list(arrows):
    return [{'from': list(ref.source), 'type': ref.type, 'matrix': m.to_json()}
            for ref, m in sorted(arrows.items())]

def to_data(p):
    """ the JSON object of a presentation, in sorted order """
    vertices = p.vertices
    data = {
        'n': p.n,
        'window': [list(v) for v in vertices],
        'dims': [p.dims[v] for v in vertices],
        'generators': [list(v) for v in sorted(p.generators)],
        'arrows': _arrow_list(p.arrows),
    }
    if p.boundary:
        data['boundary'] = _arrow_list(p.boundary)
    if p.labels:
        data['labels'] = [list(p.labels[v]) if v in p.labels else None for v in vertices]
    if p.frame is not None:
        data['frame'] = p.frame.to_json()
    return data

def dumps(p, pretty=False):
    if pretty:
        return json.dumps(to_data(p), sort_keys=True, indent=2)
    return json.dumps(to_data(p), sort_keys=True)

def dump_net(p, path_or_file, pretty=False):
    text = dumps(p, pretty) + "\n"
    if hasattr(path_or_file, 'write'):
        path_or_file.write(text)
    else:
        with open(path_or_file, 'w') as f:
            f.write(text)


def parse_gen_spec(data):
    """ a GenSpec from the decoded JSON object; only n and seeds are required """
    if not isinstance(data, dict):
        raise ParseError("A generator spec must hold a JSON object")
    unknown = sorted(set(data) - set(GEN_FIELDS))
    if unknown:
        raise ParseError("Unknown field {}".format(unknown[0]), unknown[0])
    for f in ('n', 'seeds'):
        if f not in data:
            raise ParseError("Missing field {}".format(f), f)

    n = data['n']
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise ParseError("n must be an integer >= 1", 'n')
    if not isinstance(data['seeds'], list):
        raise ParseError("seeds must be a list", 'seeds')
    seeds = [parse_vertex(v, n, 'seeds') for v in data['seeds']]
    for f in ('seed_rng', 'window_radius'):
        x = data.get(f)
        if x is not None and (not isinstance(x, int) or isinstance(x, bool)):
            raise ParseError("{} must be an integer".format(f), f)
    if not isinstance(data.get('conjugate', False), bool):
        raise ParseError("conjugate must be true or false", 'conjugate')
    radius = data.get('window_radius')
    if radius is not None and radius < n + 1:
        raise ParseError("window_radius must be at least {}".format(n + 1), 'window_radius')
    try:
        return GenSpec(n, seeds, data.get('seed_rng') or 0, radius, data.get('conjugate', False))
    except NetError as e:
        raise ParseError(str(e), 'seeds')

def load_gen_spec(path_or_file):
    """ read a generator spec file; an open file object is read as a stream """
    try:
        if hasattr(path_or_file, 'read'):
            text = path_or_file.read()
        else:
            with open(path_or_file) as f:
                text = f.read()
    except (IOError, OSError) as e:
        raise ParseError("Cannot read {}: {}".format(path_or_file, e))
    try:
        data = json.loads(text)
    except ValueError as e:
        raise ParseError("Not a JSON document: {}".format(e))
    return parse_gen_spec(data)
