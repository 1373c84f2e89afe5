import sys
import pytest

sys.exit(pytest.main(["-s", "--cov=gdpkit"]))
