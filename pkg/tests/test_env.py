from core.env import Caps, EnvConfig, get_config_summary, load_limits


def test_builtin_limits(tmp_path):
    limits = load_limits(tmp_path / 'missing.yaml')
    assert limits == {'caps': {'degree': 40, 'slice': 200000, 'symmetric': 8}, 'seed': 20240601}


def test_limits_file_overrides(tmp_path):
    path = tmp_path / 'limits.yaml'
    path.write_text('caps:\n  degree: 12\nseed: 7\n')
    limits = load_limits(path)
    assert limits['caps'] == {'degree': 12, 'slice': 200000, 'symmetric': 8}
    assert limits['seed'] == 7


def test_environment_beats_file(tmp_path, monkeypatch):
    path = tmp_path / 'limits.yaml'
    path.write_text('caps:\n  degree: 12\n')
    config = EnvConfig(load_limits(path))
    monkeypatch.setenv('COINVKIT_CAPS_DEGREE', '7')
    monkeypatch.setenv('COINVKIT_CAPS_SLICE', 'lots')
    caps = Caps.from_env(config)
    assert caps.degree == 7
    assert caps.slice == 200000


def test_caps_override():
    caps = Caps().override(slice=10)
    assert caps == Caps(degree=40, slice=10, symmetric=8)
    assert Caps().override() == Caps()


def test_config_summary(monkeypatch):
    monkeypatch.setenv('COINVKIT_SEED', '99')
    summary = get_config_summary()
    assert summary['seed'] == 99
    assert summary['overrides_count'] >= 1
