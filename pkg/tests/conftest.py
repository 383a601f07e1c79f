from pytest import fixture


def pytest_addoption(parser):
    parser.addoption(
        "--_verbose",
        action="store",
        default=False,
        help="pass verbose=True to the shooting solver",
    )


@fixture(scope="session")
def _verbose(request):
    return request.config.getoption("--_verbose") in (True, "True", "true", "1")
