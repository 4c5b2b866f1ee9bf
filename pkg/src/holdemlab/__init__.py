"""holdemlab: a heads-up no-limit hold'em research toolkit.

Modules
-------
cards        card types and five/seven-card hand evaluation
engine       hand state machine for HUNL plus Kuhn and Leduc presets
gametree     full game-tree materialization, expected value, best response
solver       counterfactual regret minimization (CFR / CFR+)
abstraction  equity, equity histograms, EMD bucketing, bet menus
agents       rule-based roster and blueprint (solved-profile) agents
evaluation   match running, duplicate/AIVAT estimators, LBR, ELO
rlcore       state tensor encoders, clipped policy/value losses, self-play pool
wire         JSON message and hand-history formats
server       TCP match server and websocket gateway
client       socket client SDK
cli          command-line entry points
"""

__version__ = "0.1.0"

__all__ = [
    "cards",
    "engine",
    "gametree",
    "solver",
    "abstraction",
    "agents",
    "evaluation",
    "rlcore",
    "wire",
    "server",
    "client",
    "cli",
]
