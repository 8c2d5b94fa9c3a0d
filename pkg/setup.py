import setuptools

long_description = (
    "doamachine decides whether a linear sensor array admits unambiguous single-source "
    "direction-of-arrival estimation from wrapped phase differences, and checks the verdict "
    "with simulation and a brute-force pattern collision search."
)

description = "Direction-of-arrival identifiability for non-uniform linear arrays"
distname = "doamachine"
license = "MIT"
version = "0.1.0"


def setup_package():
    metadata = dict(
        name=distname,
        packages=[
            "doamachine",
            "doamachine.estimate",
            "doamachine.geometry",
            "doamachine.identify",
            "doamachine.phase",
            "doamachine.simulate",
        ],
        package_data={"doamachine": ["datasets/*/layout.json"]},
        description=description,
        keywords=["direction of arrival", "array signal processing", "phase unwrapping"],
        license=license,
        version=version,
        long_description=long_description,
        include_package_data=True,
        classifiers=[
            "Development Status :: 3 - Alpha",
            "Intended Audience :: Developers",
            "Intended Audience :: Science/Research",
            "Topic :: Scientific/Engineering",
            "Topic :: Scientific/Engineering :: Mathematics",
            "Topic :: Software Development :: Libraries :: Python Modules",
            "License :: OSI Approved :: MIT License",
            "Programming Language :: Python :: 3",
            "Operating System :: OS Independent",
        ],
        python_requires=">=3.8",
        install_requires=[i.strip() for i in open("requirements.txt").readlines() if i.strip()],
        extras_require={"test": ["pytest>=6.0", "hypothesis>=6.0"]},
        entry_points={"console_scripts": ["doamachine=doamachine.cli:main"]},
    )

    setuptools.setup(**metadata)


if __name__ == "__main__":
    setup_package()
