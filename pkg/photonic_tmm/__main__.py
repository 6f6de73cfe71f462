import sys

from photonic_tmm.cli import main

sys.exit(main())
