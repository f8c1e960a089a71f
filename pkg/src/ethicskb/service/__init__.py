"""HTTP walkthrough service: sessions over knowledge-base trees."""

from ethicskb.service.app import create_app
from ethicskb.service.sessions import Session, SessionStore, export_session

__all__ = ["Session", "SessionStore", "create_app", "export_session"]
