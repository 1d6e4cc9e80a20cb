from hypothesis import settings

pytest_plugins = [
    "tests.fixtures.manifolds",
    "tests.fixtures.config",
]

# Smith normal forms go through sympy, whose first calls are slow
settings.register_profile("casson", deadline=None, max_examples=100)
settings.load_profile("casson")
