"""
Help text constants for the steaneChef CLI.

This module centralizes all help and usage text for CLI commands and options,
ensuring consistent and maintainable documentation across the toolkit.
"""

# Command descriptions
CODES_HELP = "List the registered codes, or print the check file of one."
SYNTH_HELP = "Synthesize the four preparation circuits of a verified |0>_L preparation."
VERIFY_HELP = "Check a quadruple of preparation circuits against the distinctness conditions."
SIMULATE_HELP = "Estimate acceptance and logical failure rates under circuit-level noise."
INJECT_HELP = "Exhaustively inject fault combinations into the protocol."

# Global option descriptions
ARGS_HELP = "Show this help message and exit."
ARGS_VERBOSE_HELP = "Enable verbose output and debug logging"
ARGS_CONFIG_HELP = "INI file for application settings, or a JSON/YAML synthesis config"
ARGS_SEED_HELP = "Seed for synthesis tie-breaking and simulation"
ARGS_THREADS_HELP = "Worker threads for shot loops"
ARGS_OUT_HELP = "Directory to write artifacts into"
ARGS_PROGRESS_HELP = "Show progress bars"

# Command option descriptions
ARGS_CODE_HELP = "Registry code name or path of a check-matrix file"
ARGS_EXPORT_HELP = "Print the check file of this registry code"
ARGS_BASELINE_HELP = "Use four copies of the greedy circuit instead of guided synthesis"
ARGS_PROTOCOL_HELP = "Protocol file to use instead of circuit files"
ARGS_P_HELP = "Comma-separated physical error rates"
ARGS_SHOTS_HELP = "Shots per error rate and estimator"
ARGS_SWEEP_HELP = "Use the default three-point sweep 2e-3,5e-3,1e-2"
ARGS_FORCE_HELP = "Simulate even if the quadruple fails verification"
ARGS_FIT_HELP = "Fit the log-log slope of the logical failure rates"
ARGS_STIM_HELP = "Also write the stim circuit at the first error rate to this path"
ARGS_MAX_FAULTS_HELP = "Largest number of simultaneous faults (default: t of the code)"
ARGS_BUDGET_HELP = "Maximum number of fault combinations to enumerate"
ARGS_PREP_ONLY_HELP = "Only place faults in resets and preparation layers"

# --- Main CLI Help ---
MAIN_HELP = """steaneChef: fault-tolerant state preparation via Steane-type verification.

Synthesizes the four preparation circuits, checks the distinctness conditions,
simulates the protocol and injects faults exhaustively.
"""

MAIN_HELP_DETAILED = f"""
steaneChef Command-Line Interface.

USAGE:
  steanechef [OPTIONS] COMMAND [ARGS]...

  For detailed information about any command:
    steanechef <command> --help

Options:
  --version             Show the version and exit.
  --verbose             {ARGS_VERBOSE_HELP}
  --config PATH         {ARGS_CONFIG_HELP}
  --seed INTEGER        {ARGS_SEED_HELP}
  --threads INTEGER     {ARGS_THREADS_HELP}
  --out PATH            {ARGS_OUT_HELP}
  --help                {ARGS_HELP}

Commands:
  codes                 {CODES_HELP}
  synth                 {SYNTH_HELP}
  verify                {VERIFY_HELP}
  simulate              {SIMULATE_HELP}
  inject                {INJECT_HELP}

Exit codes: 0 success, 1 violations found, 2 usage or parse error, 3 synthesis exhausted.
"""
