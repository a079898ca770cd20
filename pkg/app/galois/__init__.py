# app/galois/__init__.py
