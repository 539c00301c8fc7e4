"""
Siberia-Spheroidal - python -m entry point
"""

from .cli import main

raise SystemExit(main())
