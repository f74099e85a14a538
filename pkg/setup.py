import pathlib
from setuptools import setup

# the directory containing this file
BASE_DIR = pathlib.Path(__file__).parent

# the text of the README file
README = (BASE_DIR / "README.md").read_text()

setup(
    name="cancellative_bounds",
    version="1.0.0",
    license="BSD",
    description=(
        "Computer-assisted upper bounds for cancellative pairs of set families: "
        "entropy bounds, a certified rho-sequence and exhaustive small-case search."
    ),
    long_description=README,
    long_description_content_type="text/markdown",
    packages=["cancellative_bounds"],
    include_package_data=True,
    python_requires=">=3.7",
    install_requires=[
        "numba",
        "numpy",
        "pandas",
        "scipy",
    ],
    tests_require=["pytest"],
    test_suite="tests",
    keywords=[
        "combinatorics", "extremal set theory", "cancellative families",
        "entropy", "computer-assisted proof",
    ],
    classifiers=[
        "Development Status :: 4 - Beta",
        "Intended Audience :: Science/Research",
        "Intended Audience :: Education",
        'License :: OSI Approved :: BSD License',
        "Programming Language :: Python :: 3",
        "Programming Language :: Python :: 3.7",
        "Topic :: Scientific/Engineering :: Mathematics",
    ],
    entry_points={
        "console_scripts": [
            "cancellative_bounds=cancellative_bounds.__main__:main",
        ]
    },
)
