import sys
from pathlib import Path

# Let tests import the shared oracles module without packaging it.
sys.path.insert(0, str(Path(__file__).parent))
