"""
Console UI: command payloads to standard output, diagnostics to standard error
"""

import json
import sys

import jinja2

from linnet.util import count_str, type_set_str, vertex_str

# set up logging
import logging
logger = logging.getLogger(__name__)


def _vector_str(v):
    return "(" + ",".join(str(x) for x in v) + ")"

def _span_str(vectors):
    if not vectors:
        return "0"
    return "span{" + ", ".join(_vector_str(v) for v in vectors) + "}"

# Same syntax as templated text elsewhere: [ blocks ], { variables }, /* comments */
template_env = jinja2.Environment(block_start_string='[', block_end_string=']',
                                  variable_start_string='{', variable_end_string='}',
                                  comment_start_string='/*', comment_end_string='*/',
                                  lstrip_blocks=True, trim_blocks=True)
template_env.filters.update({
    'vertex': lambda v: "(" + vertex_str(v) + ")",
    'vector': _vector_str,
    'span': _span_str,
    'typeset': type_set_str,
    'typesets': lambda sets: ", ".join(type_set_str(I) for I in sets),
    'count': count_str,
})

_ENTRIES = """\
[for w in entries]
  {w.check}: {w.condition}[if w.vertex] at {w.vertex|vertex}[endif][if w.types] for {w.types|typesets}[endif]

[endfor]
"""

_VIOLATION = """\
The intersection property fails at {v.vertex|vertex}:
  I0 = {v.I0|typeset}, summands {v.summands|typesets}
  lhs = {v.lhs|span}
  rhs = {v.rhs|span}
"""

TEMPLATES = {
    'report': """\
{payload.check}: {payload.verdict}, {payload.witnesses|length|count('witness')}, \
{payload.coverage|length|count('skipped condition')}
[with entries = payload.witnesses]
""" + _ENTRIES + """\
[endwith]
""",

    'hull': """\
The hull of {payload.set|length|count('vertex')} has {payload.hull|length|count('vertex')}:
[for v in payload.hull]
  {v|vertex}
[endfor]
""",

    'intersection': """\
[if payload.holds]
The intersection property holds[if payload.vertex] at {payload.vertex|vertex}[endif].
[else]
[with v = payload.violation]
""" + _VIOLATION + """\
[endwith]
[endif]
""",

    'decomposition': """\
[if payload.semisimple]
Semisimple, {payload.summands|length|count('simple summand')}:
[for s in payload.summands]
  generated at {s.generator_vertex|vertex} by {s.generator_vector|vector}
[endfor]
[else]
Not semisimple.
[with v = payload.violation]
""" + _VIOLATION + """\
[endwith]
[endif]
""",
}


class ConsoleUI(object):
    """
    Interface between the App and the terminal
    """

    def __init__(self, app, instream=None, outstream=None, errstream=None):
        self._app = app
        self.instream = instream or sys.stdin
        self.stdout = outstream or sys.stdout
        self.stderr = errstream or sys.stderr

    def render(self, template, payload):
        return template_env.from_string(TEMPLATES[template]).render(payload=payload)

    def show(self, result):
        """ print a CommandResult's payload """
        if result.payload is None:
            return
        if self._app.pretty and result.template in TEMPLATES:
            self.output(self.render(result.template, result.payload), end='')
        elif self._app.pretty:
            self.output(json.dumps(result.payload, sort_keys=True, indent=2))
        else:
            self.output(json.dumps(result.payload, sort_keys=True))

    def output(self, msg, end='\n'):
        """
        Output a message to the user
        """
        self.stdout.write(msg + end)
        self.stdout.flush()

    def error(self, msg, end='\n'):
        """
        Output a diagnostic; never goes to standard output
        """
        logger.debug('Reporting error: {}'.format(msg))
        self.stderr.write(msg + end)
        self.stderr.flush()
