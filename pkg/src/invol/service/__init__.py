"""HTTP service wrapping the verification toolkit.

The FastAPI application lives in :mod:`invol.service.app`; request and
response schemas in :mod:`invol.service.models`; the handlers in
:mod:`invol.service.handlers` are plain functions shared by the HTTP routes
and the command-line client.
"""

from invol.service.app import app

__all__ = ["app"]
