"""
Builds the html api docs of the gdpkit package.
# html format
# --force deletes previous docs
# -o is the output dir
"""

import os

os.system("pdoc gdpkit --html --force -o doc")
