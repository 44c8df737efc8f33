__author__ = "Nick Florin"
__copyright__ = "Copyright (C) 2022 Nick Florin"
__version__ = "0.1.0"
__appname__ = "tree-recourse"
