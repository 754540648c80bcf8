"""
Testing for the cliquebound package.
"""

##########################################################################
## Imports
##########################################################################

import unittest


##########################################################################
## Test Cases
##########################################################################


class InitializationTest(unittest.TestCase):

    def test_initialization(self):
        """
        Tests a simple world fact by asserting that 10*10 is 100.
        """
        self.assertEqual(10*10, 100)

    def test_import(self):
        """
        Can import cliquebound
        """
        try:
            import cliquebound
        except ImportError:
            self.fail("Unable to import the cliquebound module!")

    def test_version(self):
        """
        The package exposes its short version
        """
        import cliquebound
        self.assertEqual(cliquebound.__version__, cliquebound.get_version(short=True))
