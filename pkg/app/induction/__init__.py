# app/induction/__init__.py
