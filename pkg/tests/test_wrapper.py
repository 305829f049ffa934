import json
import subprocess
import sys
from pathlib import Path
import tempfile


def venv_python():
    # Use the current Python executable (likely venv in tests)
    return sys.executable


def test_help_lists_subcommands():
    p = subprocess.run([venv_python(), 'trailsolve.py', '-h'], capture_output=True, text=True)
    assert p.returncode == 0
    for name in ('solve', 'minmax', 'oracle', 'generate', 'verify', 'untangle', 'dot'):
        assert name in p.stdout


def test_generate_then_solve_through_wrapper():
    gen = subprocess.run([venv_python(), 'trailsolve.py', 'generate', '--family', 'fig6', '--k', '2'],
                         capture_output=True, text=True)
    assert gen.returncode == 0
    with tempfile.TemporaryDirectory() as tmpdir:
        graph = Path(tmpdir) / 'fig6.json'
        graph.write_text(gen.stdout)
        p = subprocess.run([venv_python(), 'trailsolve.py', 'solve', '--input', str(graph), '--k', '3'],
                           capture_output=True, text=True)
        assert p.returncode == 1
        assert json.loads(p.stdout)['provenance'] == 'min-cut'


def test_usage_error_exit_code():
    p = subprocess.run([venv_python(), 'trailsolve.py', 'solve'], capture_output=True, text=True)
    assert p.returncode == 64
