import io
import json
import os
import shutil
import tempfile
import unittest
from unittest import mock

from madgad.cli import run
from madgad.consts import EXIT_OK, EXIT_REFUSAL, EXIT_USAGE, EXIT_VALIDATION, PROGRAM_BANNER
from madgad.decomp.constructions import CONSTRUCTIONS

K4 = '4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n'


class CliTest(unittest.TestCase):

    def setUp(self):
        self.workdir = tempfile.mkdtemp(prefix='madgad-')

    def tearDown(self):
        shutil.rmtree(self.workdir, ignore_errors=True)

    def path(self, name, text=None):
        path = os.path.join(self.workdir, name)
        if text is not None:
            with open(path, 'w') as f:
                f.write(text)
        return path

    def invoke(self, *argv, stdin=''):
        out = io.StringIO()
        with mock.patch('sys.stdout', out), mock.patch('sys.stdin', io.StringIO(stdin)):
            status = run(list(argv))
        return status, out.getvalue()

    def report(self, *argv, **kwargs):
        status, text = self.invoke(*argv, **kwargs)
        self.assertEqual(status, EXIT_OK, text)
        return json.loads(text)

    def test_mad(self):
        body = self.report('mad', stdin=K4)
        self.assertEqual(body['command'], 'mad')
        self.assertEqual(body['mad'], '3/1')
        self.assertEqual(body['witness'], [0, 1, 2, 3])
        self.assertEqual(self.report('mad', self.path('g.txt', '3 0\n'))['mad'], '0/1')

    def test_mad_rejects_bad_graphs(self):
        self.assertEqual(self.invoke('mad', stdin='0 0\n')[0], EXIT_USAGE)
        self.assertEqual(self.invoke('mad', stdin='3 2\n0 1\n')[0], EXIT_USAGE)
        self.assertEqual(self.invoke('mad', self.path('missing.txt'))[0], EXIT_USAGE)

    def test_formulas(self):
        body = self.report('formula', 'mlist', '--k', '7', '--N', '28')
        self.assertEqual(body['value'], '16/1')
        self.assertEqual(body['triple'], [3, 2, 1])
        self.assertEqual(body['multiset'], {'K_4': 2, 'K_3': 4, 'G_{3,1}': 1})
        self.assertEqual(self.report('formula', 'g', '--m', '5')['value'], '5/2')
        self.assertEqual(self.report('formula', 'm2', '--n', '5')['value'], '24/5')
        self.assertEqual(self.report('formula', 'lower', '--k', '13', '--n', '13')['source'], 'plane-i')
        caps = self.report('formula', 'sqrt', '--k', '4', '--n', '10')
        self.assertEqual(caps['cap_kn'], {'lo': '20/1', 'hi': '20/1'})
        self.assertEqual(self.report('formula', 'plan', '--ratio', '5')['x'], '1/3')

    def test_formula_usage_errors(self):
        self.assertEqual(self.invoke('formula', 'g')[0], EXIT_USAGE)
        self.assertEqual(self.invoke('formula', 'mlist', '--k', '5', '--N', '4')[0], EXIT_USAGE)
        self.assertEqual(self.invoke('formula', 'plan', '--ratio', 'abc')[0], EXIT_USAGE)
        self.assertEqual(self.invoke('formula', 'plan', '--ratio', '1/0')[0], EXIT_USAGE)
        self.assertEqual(self.report('formula', 'plan', '--ratio', '7/2')['inputs']['ratio'], '7/2')

    def test_designs(self):
        body = self.report('design', 'sts', '--n', '7')
        self.assertEqual(body['kind'], 'design')
        self.assertEqual(len(body['blocks']), 7)
        self.assertEqual(len(self.report('design', 'psts', '--n', '5')['leave']), 4)
        body = self.report('design', 'truncate', '--q', '3', '--plane', 'ag', '--mode', 'line')
        self.assertEqual(body['points'], 6)

    def test_construct_and_verify(self):
        status, text = self.invoke('construct', 'k2', '-p', 'n=5')
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(text)['kind'], 'decomposition')
        report = self.report('verify', self.path('k2.json', text))
        self.assertEqual(report['total'], '24/5')
        self.assertEqual(report['source'], 'k2')

        status, text = self.invoke('construct', 'apex', '--input', self.path('k2.json'))
        self.assertEqual(status, EXIT_OK)
        self.assertEqual(json.loads(text)['n'], 6)

    def test_verify_design_and_pbd(self):
        self.assertEqual(self.invoke('design', 'pg', '--q', '3', '--out', self.path('pg3.json'))[0], EXIT_OK)
        body = self.report('verify', self.path('pg3.json'))
        self.assertEqual((body['kind'], body['blocks']), ('design', 13))
        status, text = self.invoke('construct', 'design', '--input', self.path('pg3.json'))
        self.assertEqual(status, EXIT_OK)
        body = self.report('verify', stdin=text)
        self.assertEqual(body['total'], '39/1')
        self.assertEqual(body['pbd_total'], '39/1')

    def test_construct_usage_errors(self):
        self.assertEqual(self.invoke('construct', 'hypercube', '-p', 'n=4')[0], EXIT_USAGE)
        self.assertEqual(self.invoke('construct', 'k2', '-p', 'm=4')[0], EXIT_USAGE)
        self.assertEqual(self.invoke('construct', 'k2', '-p', 'n')[0], EXIT_USAGE)
        self.assertEqual(self.invoke('construct', 'k2')[0], EXIT_USAGE)

    def test_construct_bugs_are_not_usage_errors(self):
        def broken(n):
            raise TypeError('unsupported operand')

        with mock.patch.dict(CONSTRUCTIONS, {'broken': broken}):
            with self.assertRaises(TypeError):
                self.invoke('construct', 'broken', '-p', 'n=4')

    def test_verify_reports_overlaps(self):
        broken = {'kind': 'decomposition', 'n': 3,
                  'parts': [{'n': 3, 'edges': [[0, 1], [1, 2], [0, 2]]}, {'n': 3, 'edges': [[0, 1]]}]}
        self.assertEqual(self.invoke('verify', stdin=json.dumps(broken))[0], EXIT_VALIDATION)

    def test_normalize(self):
        trace = self.path('trace.json')
        body = self.report('normalize', '--counts', '6,0,3', '--trace', trace)
        self.assertEqual(body['mad_sum'], '6/1')
        self.assertEqual(body['terminal'], [[3, 0], [3, 0], [3, 0]])
        with open(trace) as f:
            self.assertEqual(json.load(f)['kind'], 'trace')
        self.assertEqual(self.invoke('normalize', '--counts', '1,x')[0], EXIT_USAGE)

    def test_oracles(self):
        self.assertEqual(self.report('oracle', 'mkn', '--k', '2', '--n', '4')['value'], '7/2')
        self.assertEqual(self.report('oracle', 'mlist', '--k', '3', '--N', '10')['value'], '6/1')
        self.assertEqual(self.report('oracle', 'mad', stdin=K4)['mad'], '3/1')
        self.assertEqual(self.report('oracle', 'invariants', stdin=K4)['chi'], 4)

    def test_oracle_refusals(self):
        self.assertEqual(self.invoke('oracle', 'mkn', '--k', '2', '--n', '8')[0], EXIT_REFUSAL)
        self.assertEqual(self.invoke('oracle', 'mkn', '--k', '2', '--n', '6', '--budget-n', '5')[0], EXIT_REFUSAL)
        self.assertEqual(self.invoke('oracle', 'colorings', '--k', '3', '--n', '6')[0], EXIT_REFUSAL)

    def test_output_options(self):
        status, text = self.invoke('formula', 'm2', '--n', '4', '--table')
        self.assertEqual(status, EXIT_OK)
        self.assertIn('value', text)
        self.assertIn('7/2', text)
        self.assertIn('elapsed_seconds', self.report('formula', 'm2', '--n', '4', '--timing'))
        out = self.path('m2.json')
        self.assertEqual(self.invoke('formula', 'm2', '--n', '4', '--out', out), (EXIT_OK, ''))
        with open(out) as f:
            self.assertEqual(json.load(f)['value'], '7/2')

    def test_version(self):
        out = io.StringIO()
        with mock.patch('sys.stdout', out), self.assertRaises(SystemExit) as ctx:
            run(['--version'])
        self.assertEqual(ctx.exception.code, 0)
        self.assertEqual(out.getvalue().strip(), PROGRAM_BANNER)

    def test_selftest(self):
        body = self.report('selftest', '--quick', '--seed', '7')
        self.assertEqual(body['failed'], 0, body['checks'])
        self.assertEqual(body['passed'], len(body['checks']))
