from dyckgen.constants import VERSION as __version__
