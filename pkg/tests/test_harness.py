import ast
import json
import os
import pathlib

import pytest

import snerve
from snerve.enriched.fincat import square_category
from snerve.extras.concurrency import THREADS_ENV, parallel_map, thread_count
from snerve.harness.certificate import counts_table, parse_certificate, report_render
from snerve.harness.cli import main
from snerve.harness.codec import content_hash, decode, encode, read_document, sset_to_document, write_document
from snerve.harness.corpus import build_as, corpus, ez2, validate_fixture
from snerve.nerves.ordinary import ordinary_nerve
from snerve.simplicial.iso import sset_iso
from snerve.simplicial.sset import validate_sset
from snerve.types.certificate import Certificate
from snerve.types.enum import FixtureKind, ReportFormat
from snerve.types.error import CapError, LevelError, SchemaError
from snerve.workspace import Workspace


@pytest.fixture
def nerve_doc():
    return sset_to_document(ordinary_nerve(square_category(), 2))


# ---------------------------------------------------------------- documents

def test_sset_document_decodes_to_an_isomorphic_complex(nerve_doc):
    X = ordinary_nerve(square_category(), 2)
    Y = decode(nerve_doc)
    assert Y.counts() == X.counts()
    assert validate_sset(Y).ok
    assert sset_iso(Y, X) is not None
    assert encode(Y) == nerve_doc


def test_fincat_document_keeps_tuple_objects():
    D = square_category()
    assert decode(encode(D)) == D


@pytest.mark.parametrize('name', ['bz2', 'ez2', 'two_point_meet'])
def test_structured_documents_are_stable(build, name):
    C = build(name, 'monoidal', cap=1)
    doc = encode(C)
    assert doc['kind'] == 'monoidal'
    assert encode(decode(doc)) == doc
    assert encode(decode(encode(C.underlying))) == encode(C.underlying)


def test_diagram_document_is_stable(build):
    F = build('point_to_arrow', 'diagram', cap=1)
    doc = encode(F)
    assert encode(decode(doc)) == doc


def test_wrong_kind(nerve_doc):
    with pytest.raises(SchemaError):
        decode(nerve_doc, kinds=['fincat'])
    with pytest.raises(SchemaError):
        decode(dict(nerve_doc, kind='sheaf'))
    with pytest.raises(SchemaError):
        decode({'cells': []})


def test_unknown_cell_id(nerve_doc):
    face = dict(nerve_doc['face'])
    face['1.0'] = ['9.9'] + face['1.0'][1:]
    with pytest.raises(SchemaError, match='unknown cell'):
        decode(dict(nerve_doc, face=face))


def test_misaligned_table(nerve_doc):
    degen = dict(nerve_doc['degen'])
    degen['0.0'] = degen['0.0'][:-1]
    with pytest.raises(SchemaError, match='align'):
        decode(dict(nerve_doc, degen=degen))
    with pytest.raises(SchemaError):
        decode(dict(nerve_doc, cap=3))


def test_missing_operator_table(nerve_doc):
    face = dict(nerve_doc['face'])
    del face['2.1']
    with pytest.raises(SchemaError, match='lacks'):
        decode(dict(nerve_doc, face=face))


def test_content_hash_ignores_key_order(nerve_doc):
    digest = content_hash(nerve_doc)
    assert digest.startswith('sha256:')
    assert len(digest) == len('sha256:') + 64
    assert content_hash(dict(reversed(list(nerve_doc.items())))) == digest
    assert content_hash(dict(nerve_doc, name='other')) != digest


def test_read_document(tmp_path, nerve_doc):
    path = str(tmp_path / 'nerve.json')
    write_document(path, nerve_doc)
    assert read_document(path) == nerve_doc
    bad = tmp_path / 'bad.json'
    bad.write_text('[1, 2')
    with pytest.raises(SchemaError):
        read_document(str(bad))
    bad.write_text('[1, 2]')
    with pytest.raises(SchemaError):
        read_document(str(bad))


# ---------------------------------------------------------------- corpus

def test_corpus_listing():
    entries = corpus()
    assert len(entries) >= 8
    assert {e.kind for e in entries.values()} == set(FixtureKind) - {FixtureKind.scat}
    assert any(not e.valid for e in entries.values())


@pytest.mark.parametrize('name', ['arrow', 'bz2', 'left_zero', 'swap_over_z2', 'broken_square'])
def test_validators_agree_with_the_listing(name):
    assert validate_fixture(name, 1).ok == corpus()[name].valid


def test_fixture_coercions():
    assert build_as('square', FixtureKind.scat, 1).hom((0, 0), (1, 1)).counts() == (1, 1)
    assert build_as('bz2', FixtureKind.scat, 1).objects == ('*',)
    assert build_as('point_to_arrow', FixtureKind.grcat, 1).objects == (('*', 0), ('a', 1), ('b', 1))
    with pytest.raises(SchemaError):
        build_as('bz2', FixtureKind.diagram, 1)
    with pytest.raises(SchemaError):
        build_as('no-such-fixture', FixtureKind.scat, 1)


# ---------------------------------------------------------------- certificates

def _certificate():
    cert = Certificate(command='check something', inputs={'bz2': 'sha256:00'})
    cert.record('first', True)
    cert.counts['N'] = [1, 2, 4]
    cert.counts['short'] = [3]
    return cert.finish()


def test_certificate_verdicts():
    cert = _certificate()
    assert cert.passed and cert.verdict == 'PASS'
    cert.record('second', False, ('*', 0))
    cert.record('third', False, 'later')
    assert cert.verdict == 'FAIL'
    assert cert.counterexample == "second: ('*', 0)"
    assert not Certificate(command='empty').passed


def test_structured_rendering_parses_back():
    cert = _certificate()
    rendered = report_render(cert, ReportFormat.structured)
    assert parse_certificate(rendered) == cert
    assert json.loads(report_render(cert, ReportFormat.structured, with_time=False)).get('elapsed') is None


def test_text_rendering():
    text = report_render(_certificate(), ReportFormat.text, with_time=False)
    assert text.startswith('PASS  check something')
    assert '[ok] first' in text
    assert 'elapsed' not in text
    assert report_render(_certificate(), 'text', with_time=False) == text


def test_counts_table_pads_short_rows():
    frame = counts_table(_certificate())
    assert list(frame.index) == ['N', 'short']
    assert frame.loc['N'].tolist() == [1, 2, 4]
    assert frame.loc['short'].isna().sum() == 2


def test_library_modules_do_not_import_the_harness():
    root = pathlib.Path(snerve.__file__).parent
    for package in ('simplicial', 'enriched', 'nerves', 'grothendieck', 'monoidal', 'types'):
        for path in (root / package).glob('*.py'):
            tree = ast.parse(path.read_text(encoding='utf-8'))
            imported = [node.module for node in ast.walk(tree) if isinstance(node, ast.ImportFrom)]
            imported += [alias.name for node in ast.walk(tree) if isinstance(node, ast.Import) for alias in node.names]
            assert not [m for m in imported if m and (m.startswith('snerve.harness') or m == 'pandas')], path


def test_contradicting_verdict():
    doc = _certificate().to_dict()
    with pytest.raises(SchemaError, match='contradicts'):
        parse_certificate(json.dumps(dict(doc, verdict='FAIL')))
    with pytest.raises(SchemaError):
        parse_certificate('PASS')
    with pytest.raises(SchemaError):
        parse_certificate(json.dumps({'verdict': 'PASS'}))


# ---------------------------------------------------------------- workspace

def test_workspace_configuration():
    ws = Workspace()
    assert ws.cap == Workspace.DEFAULT_CAP
    assert ws.delta_max == Workspace.DEFAULT_DELTA_MAX
    with pytest.raises(CapError):
        Workspace(cap=-1)
    with pytest.raises(LevelError):
        Workspace(delta_max=0)


def test_loaded_document_must_match_the_cap(tmp_path):
    path = str(tmp_path / 'ez2.json')
    write_document(path, encode(ez2(1)))
    ws = Workspace(cap=2, output_dir=str(tmp_path))
    assert ws.kind_of(path) == FixtureKind.scat
    with pytest.raises(CapError):
        ws.load(path, FixtureKind.scat)
    C = Workspace(cap=1, output_dir=str(tmp_path)).load(path, FixtureKind.scat)
    assert C.hom('*', '*').counts() == (2, 4)
    with pytest.raises(SchemaError):
        Workspace(cap=1).load(path, FixtureKind.monoidal)


def test_certificates_carry_input_hashes(tmp_path):
    ws = Workspace(cap=2, output_dir=str(tmp_path))
    cert = ws.check_gr_relnerve('point_to_arrow', 2)
    assert cert.passed
    assert cert.inputs['point_to_arrow'].startswith('sha256:')
    assert Workspace(cap=2).check_gr_relnerve('point_to_arrow').inputs == cert.inputs


def test_corpus_check():
    cert = Workspace(cap=1).check_corpus()
    assert cert.passed, cert.counterexample
    assert len(cert.checks) == len(corpus())


def test_quasicat_on_a_grothendieck_construction():
    ws = Workspace(cap=2)
    assert ws.check_quasicat('broken_opfibration').passed
    assert ws.check_quasicat('point_to_arrow').passed


# ---------------------------------------------------------------- command line

def test_cli_pass(tmp_path, capsys):
    status = main(['check', 'gr-relnerve', '--diagram', 'bz2_over_arrow', '--nmax', '2', '--cap', '2',
                   '--out', str(tmp_path), '--no-time'])
    assert status == 0
    assert capsys.readouterr().out.startswith('PASS')
    doc = read_document(str(tmp_path / 'check-gr-relnerve.certificate.json'))
    assert doc['kind'] == 'certificate'
    assert doc['verdict'] == 'PASS'
    assert decode(doc).passed


def test_cli_property_failure(tmp_path, capsys):
    status = main(['check', 'opfibration', '--diagram', 'broken_opfibration', '--cap', '2',
                   '--out', str(tmp_path), '--format', 'structured'])
    assert status == 1
    cert = parse_certificate(capsys.readouterr().out)
    assert cert.checks == {'opfibration': False}
    assert cert.counterexample is not None


def test_cli_malformed_input(tmp_path, capsys):
    status = main(['check', 'gr-relnerve', '--diagram', 'no-such-fixture', '--out', str(tmp_path)])
    assert status == 2
    assert 'no-such-fixture' in capsys.readouterr().err
    assert not os.listdir(str(tmp_path))


def test_cli_cap_mismatch_is_malformed(tmp_path):
    path = str(tmp_path / 'ez2.json')
    write_document(path, encode(ez2(1)))
    assert main(['coherent-nerve', '--scat', path, '--cap', '2', '--out', str(tmp_path / 'out')]) == 2


def test_cli_writes_artifacts(tmp_path):
    assert main(['nerve', '--base', 'z2', '--cap', '2', '--out', str(tmp_path)]) == 0
    nerve = decode(read_document(str(tmp_path / 'nerve.json')))
    assert nerve.counts() == (1, 2, 4)


def test_cli_not_locally_kan_is_a_failed_certificate(tmp_path):
    assert main(['operadic-nerve', '--monoidal', 'delta1_hom', '--cap', '2', '--delta-max', '1',
                 '--out', str(tmp_path)]) == 1
    doc = read_document(str(tmp_path / 'operadic-nerve.certificate.json'))
    assert doc['checks'] == {'NotLocallyKanError': False}


# ---------------------------------------------------------------- threads

def test_thread_count(monkeypatch):
    monkeypatch.setenv(THREADS_ENV, '3')
    assert thread_count() == 3
    assert parallel_map(lambda x: x * x, range(5)) == [0, 1, 4, 9, 16]
    monkeypatch.setenv(THREADS_ENV, 'many')
    with pytest.warns(UserWarning, match=THREADS_ENV):
        assert thread_count() == 1
