import pytest

from src.constructions import cartesian_product, catalog, complete, cycle, path, satellite, satellite_kernel_vector
from src.errors import ConstructionError
from src.spectral import classify


def test_satellite_s7_shape():
    result = satellite(3)

    assert result.graph.n == 7
    assert result.graph.edge_count == 12
    assert result.graph.degree(1) == 6
    assert result.certified_kernel_vectors == (satellite_kernel_vector(3),)


def test_satellites_are_nut_graphs():
    for k in range(3, 13):
        result = satellite(k)
        assert result.hypothesis_report == {"is_nut": True, "kernel_matches": True}
        assert result.failed_hypotheses() == []


def test_satellite_needs_k_at_least_three():
    with pytest.raises(ConstructionError) as excinfo:
        satellite(2)

    assert excinfo.value.failed_checks == ["k_at_least_3"]


def test_satellite_kernel_vector_signs():
    x = satellite_kernel_vector(4)

    assert x.total() == -1
    assert list(x) == [-1, 1, 1, 1, 1, -1, -1, -1, -1]


def test_path_cycle_complete():
    assert path(1).edge_count == 0
    assert cycle(5).degrees() == [2] * 5
    assert complete(4).edge_count == 6


def test_invalid_orders():
    with pytest.raises(ConstructionError):
        path(0)
    with pytest.raises(ConstructionError):
        cycle(2)
    with pytest.raises(ConstructionError):
        complete(0)


def test_k2_times_k3_is_the_prism():
    assert cartesian_product(complete(2), complete(3)) == catalog("PRISM6").graph


def test_k2_times_k2_is_a_four_cycle():
    product = cartesian_product(complete(2), complete(2))

    assert product.degrees() == [2, 2, 2, 2]
    assert classify(product).nullity == 2


def test_product_with_h5_sizes():
    product = cartesian_product(complete(2), catalog("H5").graph)

    assert product.n == 10
    assert product.edge_count == 17
