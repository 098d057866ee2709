"""Automatic Python configuration file."""

# Nonlinearity plugins
from .nonlinearity_plugin import NonlinearityPlugin
from .quartic_nonlinearity import QuarticNonlinearity, plugin_quartic
from .modified_gpe_nonlinearity import ModifiedGpeNonlinearity, plugin_modified_gpe
from .saturable_nonlinearity import SaturableNonlinearity, plugin_saturable
