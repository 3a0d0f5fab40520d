from setuptools import setup, find_packages

meta = {}
with open("homoglue/meta.py") as fp:
    exec(fp.read(), meta)

# Package meta-data.
IMPORTNAME = meta['__title__']
PIPNAME = meta['__packagename__']
DESCRIPTION = 'Gluing resolutions and Auslander-type conditions over bound quiver algebras.'
URL = 'https://github.com/homoglue/homoglue'
MAIL = meta['__mail__']
AUTHOR = meta['__author__']
VERSION = meta['__version__']
KEYWORDS = 'homological-algebra quiver-representations auslander-condition'

REQUIRED = [
    'numpy', 'galois', 'networkx', 'matplotlib'
]

EXTRAS = {
    'docs': ['sphinx', 'sphinx_rtd_theme', 'sphinx_copybutton'],
    'test': ['pytest', 'pytest-cov'],
}

LDESCRIPTION = (
    "HomoGlue is a Python package for exact homological algebra over bound "
    "quiver algebras over prime fields. It computes minimal projective "
    "resolutions and injective coresolutions, glues relative resolutions "
    "along short exact sequences, checks Auslander-type conditions on the "
    "injective coresolution of the regular module and of sampled modules, "
    "and builds approximation presentations together with the Gorenstein "
    "and regularity verdicts that follow from them."
)

setup(
    name=PIPNAME,
    version=VERSION,
    description=DESCRIPTION,
    long_description=LDESCRIPTION,
    author=AUTHOR,
    author_email=MAIL,
    classifiers=[
        'Development Status :: 3 - Alpha',
        'License :: OSI Approved :: MIT License',
        'Programming Language :: Python :: 3',
        'Programming Language :: Python :: 3.8',
        'Programming Language :: Python :: 3.9',
        'Programming Language :: Python :: 3.10',
        'Intended Audience :: Science/Research',
        'Topic :: Scientific/Engineering :: Mathematics'
    ],
    keywords=KEYWORDS,
    url=URL,
    license='MIT',
    packages=find_packages(exclude=['tests', 'tests.*']),
    install_requires=REQUIRED,
    extras_require=EXTRAS,
    entry_points={
        'console_scripts': ['homoglue=homoglue.cli:main'],
    },
    include_package_data=True,
    zip_safe=False,
)
