from setuptools import setup, find_packages

setup(
   name='gdpkit',
   version='0.1',
   description='Kraus operators of the generalized depolarizing channel from a microscopic master equation',
   author='GDPKIT',
   author_email='',
   packages=find_packages(exclude=['test', 'test.*']),
   install_requires=['numpy', 'scipy', 'matplotlib', 'termcolor', 'progress'], #external packages as dependencies
   entry_points={
       'console_scripts': [
           'gdp = gdpkit.cli:main',
       ]
   },
)
