import json
import unittest

from madgad.core import builders
from madgad.core.graph import Graph
from madgad.core.serialize import (
    Document,
    document,
    dump_document,
    graph_from_json,
    graph_to_json,
    load_document,
    read_graph_text,
    write_graph_text
)
from madgad.errors import FormatError, InvalidFormatVersion


class GraphTextTest(unittest.TestCase):

    def test_text_round_trip(self):
        g = builders.wheel(5)
        self.assertEqual(read_graph_text(write_graph_text(g)), g)

    def test_comments_and_blank_lines(self):
        text = '# a triangle\n3 3\n0 1\n\n1 2  # rim\n0 2\n'
        self.assertEqual(read_graph_text(text), builders.complete(3))

    def test_malformed_text(self):
        for text in ('', '3\n', '3 2\n0 1\n', '3 2\n0 1\n0 1\n', '2 1\n0 5\n', 'a b\n'):
            with self.assertRaises(FormatError):
                read_graph_text(text)

    def test_json_objects(self):
        g = builders.path(4)
        self.assertEqual(graph_from_json(graph_to_json(g)), g)
        with self.assertRaises(FormatError):
            graph_from_json({'edges': [[0, 1]]})


class DocumentTest(unittest.TestCase):

    def test_envelope(self):
        body = document('graph', graph_to_json(Graph(2, [(0, 1)])))
        self.assertEqual(body['kind'], 'graph')
        self.assertEqual(body['format'], '1.1.0')
        self.assertEqual(load_document(json.dumps(body)).graph(), Graph(2, [(0, 1)]))

    def test_plain_text_is_a_graph_document(self):
        doc = load_document('2 1\n0 1\n')
        self.assertEqual(doc.kind, 'graph')
        self.assertEqual(doc.graph().edge_count, 1)

    def test_kind_is_inferred_for_legacy_documents(self):
        doc = Document({'n': 3, 'edges': [[0, 1]]})
        self.assertEqual(doc.kind, 'graph')
        self.assertEqual(doc.format_version, '1.0.0')
        with self.assertRaises(FormatError):
            doc.decomposition()

    def test_graph_list_needs_newer_format(self):
        payload = {'kind': 'graph_list', 'graphs': [graph_to_json(builders.complete(3))]}
        with self.assertRaises(InvalidFormatVersion):
            Document(dict(payload, format='1.0.0')).graph_list()
        graphs = Document(dict(payload, format='1.1.0')).graph_list()
        self.assertEqual(len(graphs), 1)

    def test_rejects_old_and_broken_versions(self):
        with self.assertRaises(InvalidFormatVersion):
            Document({'format': '0.9.0', 'kind': 'graph', 'n': 1})
        with self.assertRaises(FormatError):
            Document({'format': 'one', 'kind': 'graph', 'n': 1})
        with self.assertRaises(FormatError):
            Document({'format': '1.1.0', 'kind': 'poster'})
        with self.assertRaises(FormatError):
            Document([1, 2])

    def test_dump_is_json(self):
        text = dump_document('trace', {'steps': []})
        self.assertEqual(json.loads(text)['kind'], 'trace')
