"""Text and JSON codecs for graphs, plus versioned madgad documents."""
import json

from semantic_version import Version as _V

from ..consts import CURRENT_FORMAT_VERSION, LEGACY_FORMAT_VERSION, MINIMUM_FORMAT_VERSION
from ..errors import DomainError, FormatError, InvalidFormatVersion
from ..utils.decorators import minimum_version
from .graph import Graph
from .graphlist import GraphList

DOCUMENT_KINDS = ('graph', 'decomposition', 'design', 'graph_list', 'trace')


def write_graph_text(g):
    lines = ['{0} {1}'.format(g.vertex_count, g.edge_count)]
    lines.extend('{0} {1}'.format(u, v) for u, v in g.edges)
    return '\n'.join(lines) + '\n'


def read_graph_text(text):
    rows = [line.split('#', 1)[0].split() for line in text.splitlines()]
    rows = [r for r in rows if r]
    if not rows:
        raise FormatError('empty graph text')
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        edges = [(int(r[0]), int(r[1])) for r in rows[1:]]
    except (IndexError, ValueError):
        raise FormatError('graph text must start with "n m" followed by "u v" lines')
    if len(edges) != m:
        raise FormatError('header announces {0} edges, found {1}'.format(m, len(edges)))
    try:
        g = Graph(n, edges)
    except DomainError as e:
        raise FormatError(str(e))
    if g.edge_count != m:
        raise FormatError('duplicate edges in graph text')
    return g


def graph_to_json(g):
    return {'n': g.vertex_count, 'edges': [list(e) for e in g.edges]}


def graph_from_json(obj):
    try:
        return Graph(int(obj['n']), (tuple(e) for e in obj.get('edges', [])))
    except (KeyError, TypeError, ValueError) as e:
        raise FormatError('malformed graph object: {0}'.format(e))
    except DomainError as e:
        raise FormatError(str(e))


def _infer_kind(payload):
    for key, kind in (('parts', 'decomposition'), ('blocks', 'design'),
                      ('graphs', 'graph_list'), ('steps', 'trace'), ('edges', 'graph')):
        if key in payload:
            return kind
    raise FormatError('cannot tell what kind of document this is (keys: {0})'.format(sorted(payload)))


class Document(object):
    """A parsed madgad JSON document with its declared format version."""

    def __init__(self, payload):
        if not isinstance(payload, dict):
            raise FormatError('a madgad document is a JSON object')
        self.payload = payload
        self.kind = payload.get('kind') or _infer_kind(payload)
        if self.kind not in DOCUMENT_KINDS:
            raise FormatError('unknown document kind {0!r}'.format(self.kind))
        self.format_version = str(payload.get('format') or LEGACY_FORMAT_VERSION)
        try:
            version = _V(self.format_version)
        except ValueError:
            raise FormatError('invalid format version {0!r}'.format(self.format_version))
        if version < _V(MINIMUM_FORMAT_VERSION):
            raise InvalidFormatVersion('format {0} < {1} is not supported'.format(
                self.format_version, MINIMUM_FORMAT_VERSION))

    def _expect(self, kind):
        if self.kind != kind:
            raise FormatError('expected a {0} document, got {1}'.format(kind, self.kind))

    def graph(self):
        self._expect('graph')
        return graph_from_json(self.payload)

    def decomposition(self):
        from ..decomp.decomposition import Decomposition
        self._expect('decomposition')
        return Decomposition.from_json(self.payload)

    def design(self):
        from ..designs.design import BlockDesign
        self._expect('design')
        return BlockDesign.from_json(self.payload)

    @minimum_version('1.1.0')
    def graph_list(self):
        self._expect('graph_list')
        try:
            return GraphList(graph_from_json(g) for g in self.payload['graphs'])
        except (KeyError, TypeError):
            raise FormatError('graph_list document needs a "graphs" array')

    @minimum_version('1.1.0')
    def trace(self):
        self._expect('trace')
        return self.payload['steps']


def load_document(text):
    """Parse JSON text into a :class:`Document`; plain graph text becomes a graph document."""
    try:
        payload = json.loads(text)
    except ValueError:
        g = read_graph_text(text)
        payload = dict(graph_to_json(g), kind='graph', format=CURRENT_FORMAT_VERSION)
    return Document(payload)


def document(kind, body):
    if kind not in DOCUMENT_KINDS:
        raise DomainError('unknown document kind {0!r}'.format(kind))
    out = {'format': CURRENT_FORMAT_VERSION, 'kind': kind}
    out.update(body)
    return out


def dump_document(kind, body):
    return json.dumps(document(kind, body), indent=2)
