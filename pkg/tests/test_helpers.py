import json
import logging
import os
import tempfile
import unittest

from src.utils.helpers import (LOGGER_NAME, atomic_write, dump_json, format_partition, format_set, get_logger,
                               hasse_dot, setup_logging)


class TestLogging(unittest.TestCase):

    def test_child_loggers(self):
        self.assertEqual(get_logger('poset').name, f'{LOGGER_NAME}.poset')

    def test_setup_with_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'pframe.log')
            logger = setup_logging(path, 'WARNING')
            get_logger('test').debug('written')
            for handler in logger.handlers:
                handler.flush()
            with open(path, encoding='utf-8') as f:
                self.assertIn('written', f.read())
            console = logger.handlers[-1]
            self.assertEqual(console.level, logging.WARNING)
            for handler in list(logger.handlers):
                handler.close()
                logger.removeHandler(handler)


class TestFormatting(unittest.TestCase):

    def test_sets_and_partitions(self):
        self.assertEqual(format_set(['0', 'a']), '{0,a}')
        self.assertEqual(format_partition([['0'], ['a', '1']]), '{{0}, {a,1}}')

    def test_dump_json_keeps_order_and_unicode(self):
        text = dump_json({'b': 1, 'a': '∇'})
        self.assertTrue(text.index('"b"') < text.index('"a"'))
        self.assertIn('∇', text)

    def test_atomic_write(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = os.path.join(tmp, 'nested', 'x.json')
            atomic_write(path, dump_json({'k': 1}))
            with open(path, encoding='utf-8') as f:
                self.assertEqual(json.load(f), {'k': 1})
            self.assertEqual(os.listdir(os.path.dirname(path)), ['x.json'])

    def test_hasse_dot(self):
        dot = hasse_dot('C"3', ['0', 'a', '1'], [(0, 1), (1, 2)], {1: 'gold'})
        self.assertTrue(dot.startswith('digraph'))
        self.assertIn('"C\\"3"', dot)
        self.assertIn('rankdir=BT', dot)
        self.assertIn('shape=box', dot)
        self.assertIn('label="a"', dot)
        self.assertIn('fillcolor=gold', dot)
        self.assertIn('style=filled', dot)
        self.assertIn('n0 -> n1', dot)
        self.assertIn('arrowhead=none', dot)
        self.assertNotIn('n0 -> n2', dot)
        self.assertTrue(dot.rstrip().endswith('}'))


if __name__ == '__main__':
    unittest.main()
