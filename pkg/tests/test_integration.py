import pytest

from src.graph.workflow import SurfaceAnalysisWorkflow
from src.models.output_schema import AnalysisReport
from tests.conftest import TYPE_EXAMPLES, WITH_BASEPOINTS


@pytest.fixture(scope="module")
def workflow():
    return SurfaceAnalysisWorkflow()


def test_type_5a_full_report(workflow):
    """Every stage runs for a basepoint-free ideal"""
    result = workflow.run(TYPE_EXAMPLES["5a"])

    assert result["valid"] and result["exit_code"] == 0
    assert result["basepoint_free"] is True
    assert result["type"] == "5a"
    assert (result["n01"], result["n10"], result["has02"]) == (1, 0, False)
    assert result["embedded_primes"] == ["<s,t,u>", "<s,t,v>"]
    assert result["hilbert"][2] == [3, 2, 2, 2, 2]
    assert result["betti"] == {
        "0": {"(-2,-1)": 4},
        "1": {"(-2,-2)": 1, "(-3,-2)": 2, "(-4,-1)": 2},
        "2": {"(-4,-2)": 2},
    }
    assert result["implicit"]["reduced"] == "x0^2*x3^2 - x0*x1^2*x2 - 2*x0*x1*x2*x3 + x1^2*x2^2"
    assert result["implicit"]["birational"] is True
    assert result["singular_lines"] == [["x0", "x1"], ["x0", "x2"], ["x1", "x3"]]
    assert result["quadric_rank"] is None
    assert result["dual"]["g"] == "T"
    assert result["dual"]["predicted_type"] == ["5a"]
    assert result["dual"]["consistent"] is True


def test_type_6_report(workflow):
    """The 2:1 case reports the quadric and its rank"""
    result = workflow.run(TYPE_EXAMPLES["6"], oracle=True)

    assert result["type"] == "6"
    assert result["implicit"]["reduced"] == "x0*x3 - x1*x2"
    assert result["implicit"]["multiplicity"] == 2
    assert result["implicit"]["oracle_checked"] is True
    assert result["quadric_rank"] == 4
    assert result["singular_lines"] == []
    assert result["dual"]["g_degree"] == "(2,0)"


def test_basepoints_stop_after_hilbert(workflow):
    """An ideal with basepoints gets the Hilbert function and nothing that needs freeness"""
    result = workflow.run(WITH_BASEPOINTS["s*t"])

    assert result["valid"] and result["exit_code"] == 0
    assert result["basepoint_free"] is False
    assert result["witness"] == "s*t"
    assert result["hilbert"] is not None
    assert result["type"] is None
    assert result["betti"] is None
    assert result["implicit"] is None
    assert result["dual"] is None


def test_invalid_input_is_reported(workflow):
    """Parse and validation errors end the pipeline with their exit code"""
    result = workflow.run(["s^2*u", "s^2*v", "t^2*u", "t^2*v + s*u^2"])
    assert not result["valid"]
    assert result["exit_code"] == 2
    assert "not bihomogeneous" in result["error"]

    result = workflow.run(["s^2*u", "s^2*v", "t^2*u"])
    assert result["exit_code"] == 3
    assert result["generators"] == []


def test_coefficient_pairing(workflow):
    """The pairing option reaches the dual-scroll stage"""
    result = workflow.run(TYPE_EXAMPLES["5a"], pairing="coefficient")
    assert result["dual"]["pairing"] == "coefficient"
    assert result["dual"]["predicted_type"] == ["5a", "5b"]
    assert result["dual"]["consistent"] is True


def test_output_fits_the_report_schema(workflow):
    """The workflow output validates as an AnalysisReport, for every type"""
    for label, texts in sorted(TYPE_EXAMPLES.items()):
        report = AnalysisReport(**workflow.run(texts))
        assert report.type == label
        assert report.to_json() == AnalysisReport(**workflow.run(texts)).to_json()
