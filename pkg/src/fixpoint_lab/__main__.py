import sys
from fixpoint_lab.cli import main

sys.exit(main())
