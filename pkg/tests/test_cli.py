import pytest

from corpuscope.cli import main


def write_corpus_dir(tmp_path, texts, name="corpus"):
    d = tmp_path / name
    d.mkdir()
    for i, text in enumerate(texts, 1):
        (d / f"doc{i}.txt").write_text(text, encoding="utf-8")
    return d


@pytest.fixture
def toy_dir(tmp_path):
    return write_corpus_dir(tmp_path, [
        "red fish blue fish swimming fish",
        "blue whale red whale singing whale",
        "red fish blue whale gliding past",
    ])


class TestIngest:
    def test_matrix_dump(self, toy_dir, tmp_path):
        out = tmp_path / "out"
        assert main(["ingest", str(toy_dir), "--out", str(out)]) == 0
        lines = (out / "matrix.tsv").read_text().splitlines()
        assert lines == sorted(lines)
        assert all(len(l.split("\t")) == 3 for l in lines)

    def test_missing_input(self, tmp_path):
        assert main(["ingest", str(tmp_path / "nope"), "--out", str(tmp_path)]) == 1


class TestStats:
    def test_outputs(self, toy_dir, tmp_path):
        out = tmp_path / "out"
        rc = main(["stats", str(toy_dir), "--range", "1:5", "--sf", "2",
                   "--out", str(out)])
        assert rc == 0
        assert (out / "frequencies.tsv").exists()
        assert (out / "summary.tsv").exists()
        assert (out / "histogram.tsv").exists()
        assert (out / "frequent_items.tsv").exists()


class TestZipfCommand:
    def test_gen_then_zipf_degenerate(self, tmp_path, capsys):
        corpus = tmp_path / "uniform.jsonl"
        rc = main(["gen", "--lexicon-size", "150", "--docs", "800",
                   "--words", "25", "--seed", "7", "--out", str(corpus)])
        assert rc == 0
        rc = main(["zipf", str(corpus), "--out", str(tmp_path / "z")])
        assert rc == 0
        assert "classification=degenerate" in capsys.readouterr().out

    def test_too_small_corpus_fails(self, tmp_path):
        d = write_corpus_dir(tmp_path, ["one two three"])
        assert main(["zipf", str(d), "--out", str(tmp_path / "z")]) == 1


class TestRangesCommand:
    def test_partition(self, tmp_path, capsys):
        texts = []
        for f, n in ((2, 6), (3, 4), (4, 3), (6, 2)):
            for i in range(n):
                word = f"term{chr(96 + f)}{chr(97 + i)}"  # digit-free token
                texts.append(" ".join([word] * f))
        d = write_corpus_dir(tmp_path, texts)
        rc = main(["ranges", str(d), "--first", "2:2", "--second", "3:3",
                   "--out", str(tmp_path / "r")])
        assert rc == 0
        assert "k=4" in capsys.readouterr().out
        assert (tmp_path / "r" / "ranges.tsv").exists()


class TestKnnCommand:
    def test_usage_error_when_band_inverted(self, toy_dir, tmp_path):
        rc = main(["knn", str(toy_dir), "--min", "3", "--max", "2",
                   "--out", str(tmp_path)])
        assert rc != 0

    def test_graph_outputs(self, toy_dir, tmp_path):
        out = tmp_path / "out"
        rc = main(["knn", str(toy_dir), "--min", "1", "--max", "99",
                   "--beta", "0", "--out", str(out)])
        assert rc == 0
        assert (out / "edges.tsv").exists()


class TestLayoutCommand:
    def test_svg_and_coords(self, toy_dir, tmp_path):
        out = tmp_path / "out"
        rc = main(["layout", str(toy_dir), "--min", "1", "--max", "99",
                   "--beta", "0", "--seed", "5", "--iterations", "40",
                   "--out", str(out)])
        assert rc == 0
        svg = (out / "graph.svg").read_text()
        assert svg.startswith("<svg")
        assert (out / "layout.tsv").exists()

    def test_highlight_file(self, toy_dir, tmp_path):
        hl = tmp_path / "hl.txt"
        hl.write_text("fish\n", encoding="utf-8")
        out = tmp_path / "out"
        rc = main(["layout", str(toy_dir), "--min", "1", "--max", "99",
                   "--beta", "0", "--iterations", "20", "--highlight", str(hl),
                   "--out", str(out)])
        assert rc == 0
        assert 'fill="red"' in (out / "graph.svg").read_text()

    def test_seed_reproducible(self, toy_dir, tmp_path):
        outs = []
        for name in ("a", "b"):
            out = tmp_path / name
            main(["layout", str(toy_dir), "--min", "1", "--max", "99",
                  "--beta", "0", "--seed", "3", "--iterations", "30",
                  "--out", str(out)])
            outs.append((out / "graph.svg").read_bytes())
        assert outs[0] == outs[1]


class TestAntonymsCommand:
    def test_extraction(self, tmp_path):
        d = write_corpus_dir(tmp_path, ["both hot and cold water"])
        out = tmp_path / "out"
        rc = main(["antonyms", str(d), "--lang", "en", "--out", str(out)])
        assert rc == 0
        body = (out / "antonyms.tsv").read_text()
        assert "cold\thot" in body


class TestGenCommand:
    def test_txt_dir_format(self, tmp_path):
        out = tmp_path / "gen"
        rc = main(["gen", "--lexicon-size", "50", "--docs", "4", "--words", "6",
                   "--format", "txt-dir", "--seed", "1", "--out", str(out)])
        assert rc == 0
        assert len(list(out.glob("*.txt"))) == 4

    def test_ct_seed_env_fallback(self, tmp_path, monkeypatch):
        outs = []
        for name, env_seed in (("a", "9"), ("b", "9")):
            monkeypatch.setenv("CT_SEED", env_seed)
            out = tmp_path / f"{name}.jsonl"
            rc = main(["gen", "--lexicon-size", "40", "--docs", "3",
                       "--words", "5", "--out", str(out)])
            assert rc == 0
            outs.append(out.read_bytes())
        assert outs[0] == outs[1]
        monkeypatch.setenv("CT_SEED", "10")
        out = tmp_path / "c.jsonl"
        main(["gen", "--lexicon-size", "40", "--docs", "3", "--words", "5",
              "--out", str(out)])
        assert out.read_bytes() != outs[0]


class TestCompareCommand:
    def test_compare_small_corpora(self, tmp_path, capsys):
        nat = write_corpus_dir(tmp_path, [
            "the whale hunted the green sea with harpoons and rage",
            "captains charted unknown waters seeking the white whale daily",
            "sailors feared storms yet loved the open sea and wind",
            "the whale rose from deep water breaking waves apart loudly",
        ], name="natural")
        rc = main(["gen", "--lexicon-size", "30", "--docs", "50", "--words", "12",
                   "--seed", "2", "--out", str(tmp_path / "uni.jsonl")])
        assert rc == 0
        out = tmp_path / "cmp"
        rc = main(["compare", str(nat), str(tmp_path / "uni.jsonl"),
                   "--min", "1", "--max", "99", "--beta", "1",
                   "--iterations", "30", "--out", str(out)])
        assert rc == 0
        report = (out / "compare.tsv").read_text()
        assert report.startswith("metric\t")
        svgs = list(out.glob("*.svg"))
        assert len(svgs) == 2


def test_unknown_subcommand_exits_2():
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2
