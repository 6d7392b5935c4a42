import pytest

from zerohecke.diagrams import all_diagrams, universal_word
from zerohecke.ndpf import (
    catalan,
    check_quotient_relations,
    generated_submonoid,
    idempotent_images_of_longest_elements,
    is_ndpf,
    masked_ndpf_element,
    ndpf_algebra_multiply,
    ndpf_compose,
    ndpf_enumerate,
    ndpf_from_word,
    ndpf_generator,
    ndpf_identity,
    ndpf_idempotents,
    ndpf_masked_word_check,
)


def test_generator_examples():
    assert ndpf_generator(1, 3) == (1, 1, 3)
    assert ndpf_generator(2, 3) == (1, 2, 2)
    with pytest.raises(ValueError):
        ndpf_generator(3, 3)


def test_generators_are_idempotent():
    for n in range(2, 7):
        for i in range(1, n):
            e = ndpf_generator(i, n)
            assert ndpf_compose(e, e) == e


def test_compose_examples():
    f = ndpf_generator(1, 3)
    assert ndpf_compose(ndpf_identity(3), f) == f
    e1, e2 = ndpf_generator(1, 3), ndpf_generator(2, 3)
    assert ndpf_compose(e1, e2) != ndpf_compose(e2, e1)
    assert ndpf_from_word((1, 2, 1), 3) == (1, 1, 1)
    with pytest.raises(ValueError):
        ndpf_compose((1, 1), (1, 2, 3))


def test_quotient_relation_holds_in_the_chosen_order():
    e1, e2 = ndpf_generator(1, 3), ndpf_generator(2, 3)
    image_121 = ndpf_from_word((1, 2, 1), 3)
    image_12 = ndpf_from_word((1, 2), 3)
    assert image_121 == image_12
    # the reversed assembly order would violate the quotient relation
    reversed_121 = ndpf_compose(e1, ndpf_compose(e2, e1))
    reversed_12 = ndpf_compose(e2, e1)
    assert reversed_121 != reversed_12


@pytest.mark.parametrize("n", range(2, 8))
def test_relation_check_passes(n):
    assert check_quotient_relations(n)


@pytest.mark.parametrize("n", range(1, 8))
def test_enumerate_counts_are_catalan(n):
    functions = ndpf_enumerate(n)
    assert len(functions) == catalan(n)
    assert len(set(functions)) == len(functions)
    for f in functions:
        assert is_ndpf(f)


def test_enumerate_small():
    assert len(ndpf_enumerate(2)) == 2
    assert ndpf_enumerate(3) == (
        (1, 1, 1),
        (1, 1, 2),
        (1, 1, 3),
        (1, 2, 2),
        (1, 2, 3),
    )


@pytest.mark.parametrize("n", range(1, 7))
def test_generators_generate_everything(n):
    assert generated_submonoid(n) == set(ndpf_enumerate(n))


@pytest.mark.parametrize("n", range(2, 7))
def test_idempotent_lattice_size(n):
    idempotents = ndpf_idempotents(n)
    assert len(idempotents) == 2 ** (n - 1)
    images = idempotent_images_of_longest_elements(n)
    assert len(set(images.values())) == 2 ** (n - 1)
    assert set(images.values()) == set(idempotents)


def test_masked_examples():
    x = masked_ndpf_element(universal_word(3), "++")
    assert x == {(1, 1, 1): 1}
    assert ndpf_algebra_multiply(x, x) == x
    y = masked_ndpf_element(universal_word(3), "+-")
    assert ndpf_algebra_multiply(y, y) == y


@pytest.mark.parametrize("n", range(2, 6))
def test_masked_word_check_passes(n):
    report = ndpf_masked_word_check(n)
    assert report.passed
    assert report.all_idempotent and not report.failures
    assert report.monoid_size == report.catalan_number == catalan(n)
    assert report.idempotent_count == 2 ** (n - 1)
    assert set(report.to_dict()) >= {"n", "word", "passed", "failures"}


def test_masked_word_repeats_per_diagram():
    # every diagram is covered exactly once by the report
    report = ndpf_masked_word_check(4)
    assert report.word == (1, 2, 3, 2, 1)
    assert len(all_diagrams(4)) == 8


def test_is_ndpf():
    assert is_ndpf((1, 1, 3))
    assert not is_ndpf((2, 2, 3))  # not regressive at 1
    assert not is_ndpf((1, 2, 1))  # not order preserving


@pytest.mark.parametrize("n", range(2, 5))
def test_quotient_map_is_word_independent(n):
    """Every reduced word of an element maps to the same parking function,
    so the quotient map is well defined on the monoid."""
    from zerohecke.permutations import all_perms, left_descents, swap_values

    def reduced_words(perm):
        descents = left_descents(perm)
        if not descents:
            yield ()
            return
        for i in sorted(descents):
            for tail in reduced_words(swap_values(perm, i)):
                yield (i,) + tail

    for perm in all_perms(n):
        images = {ndpf_from_word(w, n) for w in reduced_words(perm)}
        assert len(images) == 1
