# Endpoints package
