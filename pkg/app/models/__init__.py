# app/models/__init__.py
# Unveränderliche Werttypen: Grundmengen, Familien, Posets, Komplexe, Kettenbanden
