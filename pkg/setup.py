#!/usr/bin/env python3
"""
CoinvKit Setup Script
Creates a virtual environment with the core dependencies
"""

import os
import sys
import subprocess
import venv
from pathlib import Path


def create_venv(coinvkit_root: Path, dev: bool = False):
    """Create the virtual environment and install requirements"""
    venv_dir = coinvkit_root / '.venv'

    print("🔧 Creating virtual environment...")

    # Remove existing venv if it exists
    if venv_dir.exists():
        import shutil
        shutil.rmtree(venv_dir)

    venv.create(venv_dir, with_pip=True, clear=True)

    # Unix-like systems only
    pip_exe = venv_dir / 'bin' / 'pip'

    print("📦 Upgrading pip...")
    subprocess.run([str(pip_exe), 'install', '--upgrade', 'pip'], check=True)

    requirements = coinvkit_root / 'requirements.txt'
    if requirements.exists():
        print("📦 Installing core dependencies...")
        subprocess.run([
            str(pip_exe), 'install',
            '-r', str(requirements),
            '--cache-dir', str(coinvkit_root / 'cache' / 'pip_cache')
        ], check=True)

    if dev:
        print("📦 Installing test dependencies...")
        subprocess.run([str(pip_exe), 'install', 'pytest>=7.0.0'], check=True)

    print("✅ Virtual environment created successfully!")
    print(f"   Location: {venv_dir}")


def setup_coinvkit():
    """Main setup function"""
    coinvkit_root = Path(__file__).parent.resolve()
    dev = '--dev' in sys.argv[1:]

    print("🚀 Setting up CoinvKit...")
    print(f"   CoinvKit root: {coinvkit_root}")

    cache_dir = coinvkit_root / 'cache'
    cache_dir.mkdir(exist_ok=True)
    (cache_dir / 'pip_cache').mkdir(exist_ok=True)
    (coinvkit_root / 'data').mkdir(exist_ok=True)

    create_venv(coinvkit_root, dev=dev)

    coinvkit_exe = coinvkit_root / 'bin' / 'coinvkit'
    if coinvkit_exe.exists():
        os.chmod(coinvkit_exe, 0o755)
        print("✅ coinvkit executable is ready (will auto-detect the venv)")

    print("\n🎉 Setup complete!")
    print("\nNext steps:")
    print("1. Add CoinvKit to your environment:")
    print(f"   export COINVKIT_BASE_PATH=\"{coinvkit_root}\"")
    print("   export PATH=\"$COINVKIT_BASE_PATH/bin:$PATH\"")
    print("2. Try a command:")
    print("   coinvkit hilbert -n 3 -k 3 --variant S")
    if dev:
        print("3. Run the tests:")
        print("   .venv/bin/pytest")


if __name__ == '__main__':
    try:
        setup_coinvkit()
    except Exception as e:
        print(f"❌ Setup failed: {e}")
        sys.exit(1)
