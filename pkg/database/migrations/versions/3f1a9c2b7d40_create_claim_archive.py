"""create_claim_archive

Revision ID: 3f1a9c2b7d40
Revises:
Create Date: 2026-10-18 10:00:00.000000

"""
from alembic import op
import sqlalchemy as sa


# revision identifiers, used by Alembic.
revision = '3f1a9c2b7d40'
down_revision = None
branch_labels = None
depends_on = None


def upgrade() -> None:
    op.create_table(
        'verify_runs',
        sa.Column('id', sa.Integer(), primary_key=True),
        sa.Column('started_at', sa.DateTime(timezone=True), server_default=sa.func.now()),
        sa.Column('finished_at', sa.DateTime(timezone=True), nullable=True),
        sa.Column('claim_filter', sa.String(), nullable=True),
        sa.Column('budget', sa.Integer(), nullable=False),
        sa.Column('threads', sa.Integer(), nullable=False, server_default='1'),
        sa.Column('exit_code', sa.Integer(), nullable=False),
    )
    op.create_index('ix_verify_runs_id', 'verify_runs', ['id'])

    op.create_table(
        'claim_results',
        sa.Column('id', sa.Integer(), primary_key=True),
        sa.Column('run_id', sa.Integer(), sa.ForeignKey('verify_runs.id', ondelete='CASCADE'), nullable=False),
        sa.Column('position', sa.Integer(), nullable=False),
        sa.Column('claim_id', sa.String(), nullable=False),
        sa.Column('status', sa.String(), nullable=False),
        sa.Column('reason', sa.String(), nullable=True),
        sa.Column('nodes_visited', sa.Integer(), nullable=False, server_default='0'),
        sa.Column('wall_time', sa.Float(), nullable=False, server_default='0'),
        sa.Column('payload', sa.Text(), nullable=False),
    )
    op.create_index('ix_claim_results_id', 'claim_results', ['id'])
    op.create_index('ix_claim_results_run_id', 'claim_results', ['run_id'])
    op.create_index('ix_claim_results_claim_id', 'claim_results', ['claim_id'])


def downgrade() -> None:
    op.drop_index('ix_claim_results_claim_id', 'claim_results')
    op.drop_index('ix_claim_results_run_id', 'claim_results')
    op.drop_index('ix_claim_results_id', 'claim_results')
    op.drop_table('claim_results')
    op.drop_index('ix_verify_runs_id', 'verify_runs')
    op.drop_table('verify_runs')
