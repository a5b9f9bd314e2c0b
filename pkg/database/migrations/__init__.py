# Alembic migrations

